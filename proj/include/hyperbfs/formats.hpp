#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hyperbfs/verify.hpp"

namespace hyperbfs {

// Hypergraph (.dhg): `#vertices: a,b,c`, then `key<TAB>out,...<TAB>in,...`
// per edge.
std::string format_hypergraph(const DirectedHypergraph& g);
DirectedHypergraph parse_hypergraph(std::string_view text);

// Value set (.vs): `#carrier:`, `#zero:`, `#one:` header lines, then `plus:`
// and `times:` each followed by one line of element names per row.
std::string format_value_set(const ValueSet& vs);
ValueSet parse_value_set(std::string_view text, std::string id);

// Vector (.vec): comma-separated `key=value` pairs; absent keys are zero.
// Only nonzero entries are written.
std::string format_vector(const ValueSet& vs, const AssociativeArray& v);
AssociativeArray parse_vector(const ValueSet& vs, const KeySpace& keys, std::string_view text);

// Array (.arr): tab-separated; the header is an empty cell followed by the
// column keys, then one line per row key with `.` for absent entries.
std::string format_array(const ValueSet& vs, const AssociativeArray& a);
AssociativeArray parse_array(const ValueSet& vs, std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Value set loaded from a .vs file; its id is the file stem.
ValueSet load_value_set_file(const std::filesystem::path& path);

// One JSON line per record, fields value_set_id, theorem, profile,
// empirical, agreement, witness. `theorem` is "2.1" or "conventions"; the
// record's check is appended after a colon.
std::string format_report(const VerificationReport& report, std::string_view theorem);

// Counterexample stored in the witness of a report line.
std::optional<Counterexample> parse_counterexample_record(const ValueSet& vs,
                                                          std::string_view line);

}  // namespace hyperbfs
