#ifndef WDB_JSON_IO_HPP
#define WDB_JSON_IO_HPP

#include <optional>
#include <string>

#include "wdb/network.hpp"
#include "wdb/symmetrize.hpp"

namespace wdb {

// Network file schema:
//   { "dimension": n, "weights": [w0, w1, w2],
//     "edges": [ { "kind": "ARC"|"SEGMENT", "p": [x,y], "q": [x,y],
//                  "curvature": k, "left": "B1"|"B2"|"EXT", "right": ... } ] }
struct NetworkFile {
  GeneratingNetwork net;
  std::optional<WeightTriple> weights;
};

std::string network_to_json(const GeneratingNetwork& net,
                            const WeightTriple& w);
NetworkFile network_from_json(const std::string& text);
NetworkFile read_network_file(const std::string& path);
void write_network_file(const std::string& path, const GeneratingNetwork& net,
                        const WeightTriple& w);

// Region file schema: { "loops": [ [ { "kind", "p", "q", "curvature" } ] ] }
std::string region_to_json(const PlanarRegion& r);
PlanarRegion region_from_json(const std::string& text);
PlanarRegion read_region_file(const std::string& path);
void write_region_file(const std::string& path, const PlanarRegion& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace wdb

#endif
