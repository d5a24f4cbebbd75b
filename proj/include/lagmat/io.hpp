// JSON instance files.  Every file is an object with "schema": 1 and a
// "kind"; the remaining keys depend on the kind (see docs/formats.md).
// Output is canonical: sorted keys, sorted lists, canonical value strings.

#ifndef LAGMAT_IO_HPP
#define LAGMAT_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "lagmat/antisym.hpp"
#include "lagmat/bridges.hpp"
#include "lagmat/lagrangian.hpp"
#include "lagmat/matroids.hpp"
#include "lagmat/tract_antisym.hpp"

namespace lagmat {

inline constexpr int kSchemaVersion = 1;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InstanceKind { Bases, Circuits, Rgp, FCircuits, Matrix, Matroid, Symmetric, Gaussoid };
const char* to_string(InstanceKind k);
// Throws SchemaError for an unknown tag.
InstanceKind parse_kind(std::string_view tag);

// bases, circuits, symmetric and gaussoid files: a family of subsets of +-[n].
struct SetFamilyFile {
  InstanceKind kind = InstanceKind::Bases;
  int n = 0;
  std::vector<ESubset> sets;  // sorted, distinct
  friend bool operator==(const SetFamilyFile&, const SetFamilyFile&) = default;
};

struct MatroidFile {
  int n = 0;
  std::vector<Mask> bases;  // sorted, distinct
  friend bool operator==(const MatroidFile&, const MatroidFile&) = default;
};

using Instance = std::variant<SetFamilyFile, MatroidFile, RGPFunction, FCircuitSet, FieldMatrix>;

InstanceKind kind_of(const Instance& x);
nlohmann::json to_json(const Instance& x);
// Validates the shape only; axioms are left to the checkers.
Instance from_json(const nlohmann::json& j);

std::string serialize(const Instance& x);
std::string dump(const nlohmann::json& j);  // two-space indent, trailing newline
Instance parse_instance(std::string_view text);
// Throws SchemaError for unreadable files as well.
Instance read_instance(const std::string& path);

SetFamilyFile family_file(InstanceKind kind, int n, std::vector<ESubset> sets);

}  // namespace lagmat

#endif  // LAGMAT_IO_HPP
