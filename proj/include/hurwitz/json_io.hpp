#pragma once

// Canonical JSON forms for the library's values, plus the on-disk character
// table cache. All serialization is deterministic: object keys come out
// sorted, arrays keep their stated order, and rationals print in the reduced
// "a/b" form, so equal values always produce identical bytes.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "hurwitz/characters.hpp"
#include "hurwitz/cutjoin.hpp"
#include "hurwitz/intersection.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/poly.hpp"
#include "hurwitz/ppoly.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

using Json = nlohmann::json;

// "3,1,1" (or with surrounding spaces) -> Partition; "" -> empty partition.
// Throws precondition_error on anything else.
Partition parse_partition(const std::string& text);

// "1,3" -> {1, 3}: strictly positive, strictly increasing integers.
std::vector<int> parse_index_list(const std::string& text);

Json partition_json(const Partition& p); // array of parts, largest first

// Array of {"partition": [...], "coefficient": "a/b"} records in map order.
Json class_element_json(const std::map<Partition, Rat>& element);

Json qrule_json(const QRule& rule);

Json poly_json(const Poly& p);          // {"mu_1^2": "1/12", "1": "-1/24"}
Json ppoly_json(const PPoly<Rat>& f);   // {"2,1": "1/2"}
Json ppoly_json(const PPoly<Poly>& f);  // {"2,1": {"u^2": "3"}}

// One {"r", "g", "n", "k", "degrees", "value"} record per table row.
std::vector<Json> bracket_rows_json(long r, const BracketTable& table);
std::string bracket_rows_csv(long r, const BracketTable& table);

// --- character table cache -------------------------------------------------

Json character_table_json(const CharacterTable& table);

// Rebuilds a table from its JSON form. Throws consistency_error if the shape,
// format version, index partitions, or content checksum do not match.
CharacterTable character_table_from_json(const Json& j);

// HURWITZ_CACHE_DIR if set, else $HOME/.cache/hurwitz, else ".hurwitz-cache".
std::string default_cache_dir();

// Reads the cached table for S_d from `cache_dir`, rebuilding and rewriting
// it (atomically: write-then-rename) when the file is missing or fails
// validation. An empty cache_dir disables persistence. `log` receives one
// "hit"/"miss"/"rebuilt" note per call when non-null.
CharacterTable load_or_build_table(long d, const std::string& cache_dir,
                                   std::string* log = nullptr);

} // namespace hurwitz
