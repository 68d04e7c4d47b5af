#pragma once

#include <subrep/classify.hpp>
#include <subrep/construct.hpp>
#include <subrep/pinboard.hpp>
#include <subrep/poset.hpp>

#include <json.hpp>

#include <string>
#include <string_view>

namespace subrep::cli {

// Poset files are UTF-8 lines:
//   # comment
//   elem a b c
//   a < b          (one cover per line; "a < b < c" is shorthand for two)
// The order is the transitive closure of the covers.
Poset parse_poset_text(std::string_view text);

// Either a poset file as above or one descriptor line:
//   chain finite 5 | chain wellordered w0+5 | chain wellordered* w1
//   chain Z | chain Q | chain R | chain R\Q | chain <custom tag>
//   pin (w2,5) (w1,2) (6,aleph0) (3,1) | copin (w0,3)
//   flower <ordinal> <cardinal> | coflower <ordinal> <cardinal>
PosetDescriptor parse_descriptor_text(std::string_view text);

std::string read_file(const std::string& path);
// Reads `arg` as a file when such a file exists, else returns it verbatim.
std::string file_or_literal(const std::string& arg);

std::vector<std::string> names_of(const Poset& p, Mask m);

// JSON keys: "kind", "subRepresentable", "witness". The poset resolves
// element indices to names and may be null for symbolic descriptors.
nlohmann::json verdict_to_json(const Poset* p, const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j, const Poset* p);

// "g": [{"subset": [...], "image": [...]}, ...] in ascending subset mask order.
nlohmann::json g_to_json(const SubRepMap& g);
// Two columns: subset, representative.
std::string g_table_text(const SubRepMap& g);

std::string hasse_dot(const Poset& p);

// Short name for the isomorphism type of the suborder on m.
std::string shape_name(const Poset& p, Mask m);

} // namespace subrep::cli
