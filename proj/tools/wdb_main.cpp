#include <cstdio>
int main() { std::puts("wdb"); return 0; }
