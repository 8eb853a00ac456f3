#ifndef SRDUAL_CONSTRUCTIONS_HPP
#define SRDUAL_CONSTRUCTIONS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srdual/complex.hpp"

namespace srdual {

enum class Family {
    FigA1,
    FigA2,
    FigA4,
    FigA4Ehi,
    FigA5,
    G2,
    Dim4,
    Dim4Efgi,
    Path2,
    GluedD4,
    GluedD3,
    GluedD3G0,
    Table1Witness,
};

/// Unused parameters are ignored. Which ones a family reads:
///   path2: n;  glued_d4, glued_d3, glued_d3_g0: k, j;  table1_witness: d, n.
struct FamilyId {
    Family family = Family::FigA1;
    std::size_t k = 1;
    std::size_t j = 0;
    std::size_t d = 0;
    std::size_t n = 0;
};

std::string_view family_name(Family f);
/// Throws UnknownFamily.
Family parse_family(std::string_view name);
std::vector<Family> all_families();

/// "glued_d4(k=2, j=1)" style description.
std::string describe(const FamilyId& id);

/// Throws BadParams when params are out of range.
void validate(const FamilyId& id);

/// Diameter the construction is known to reach.
std::size_t expected_diameter(const FamilyId& id);

/// Builds the complex. With self_check set, (S2) and the expected diameter
/// are verified and a mismatch throws std::logic_error.
/// Throws BadParams.
SimplicialComplex build(const FamilyId& id, bool self_check = true);

struct CorpusEntry {
    FamilyId id;
    SimplicialComplex complex;
    std::size_t expected_diameter;
    bool expected_s2;
};

/// Every fixed figure plus parameter sweeps of the families (k <= 3, j <= 3).
std::vector<CorpusEntry> corpus();

/// Table cells with a known lower-bound construction.
bool has_table1_witness(std::size_t d, std::size_t n);

/// One cell of the table of exact values of μ(d,n) for small d and n.
struct Table1Cell {
    std::size_t d;
    std::size_t n;
    std::string printed;   // the entry as printed ("5", "n-2", ">= n-1")
    std::size_t expected;  // diameter the witness must reach
    std::optional<std::size_t> measured;
    bool s2 = false;
    std::string note;
    bool ok() const { return s2 && measured == expected; }
};

/// Builds the witness of every table cell (rows n = 4..11, columns
/// d = 2..4) and measures it.
std::vector<Table1Cell> verify_table1();

}  // namespace srdual

#endif
