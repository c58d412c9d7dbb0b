#pragma once

// Reduction from positive ONE-IN-THREE 3SAT to square grid coverage.
//
// The grid of side p (a multiple of 3) carries source rows at y = 3i + 2 and
// two-row obstacle bands at y = 3i + 3, 3i + 4 between them. Band i < |C|
// belongs to clause i and has a one-column hole under each of its three
// variables; the remaining bands are padding with a single hole at x = 2.
// Variable j owns the seven grid columns [6(j-1)+1, 6j+1] and its hole sits at
// x = 6(j-1)+2. A connector pair through a hole encodes "this variable is the
// true literal of the clause".

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "sgpc/grid.hpp"

namespace sgpc {

struct PositiveCnf {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;  // 1-based variable indices

  friend bool operator==(const PositiveCnf&, const PositiveCnf&) = default;
};

/// Throws PreconditionError unless every clause has three distinct variables
/// within 1..num_vars.
void validate(const PositiveCnf& cnf);

/// Reads the text format: a header `vars N clauses M` followed by M lines of
/// three distinct 1-based variable indices. Blank lines and lines starting
/// with '#' or 'c ' are ignored. Throws PreconditionError with a line number.
PositiveCnf parse_cnf(std::istream& in);
PositiveCnf parse_cnf_text(const std::string& text);
std::string format_cnf(const PositiveCnf& cnf);

using Assignment = std::vector<bool>;  // index j-1 holds variable j

/// True iff every clause has exactly one true variable.
bool is_one_in_three(const PositiveCnf& cnf, const Assignment& a);

/// How the side p was chosen.
enum class DimsCase { equal, h_gt_v, v_gt_h_div6, v_gt_h_rem };
std::string to_string(DimsCase c);

struct LayoutDims {
  int h = 0;  // 3(1 + 2|U|)
  int v = 0;  // 3(1 + |C|)
  int p = 0;
  DimsCase dims_case = DimsCase::equal;
};

/// Requires num_vars >= 3 and num_clauses >= 1.
LayoutDims reduction_dims(int num_vars, int num_clauses);

/// p^2/3 + 2(p/3 - 1). Requires p % 3 == 0 and p >= 3.
std::int64_t target_budget(std::int64_t p);

struct ColumnQuota {
  int column = 1;  // 1-based variable index
  std::int64_t when_false = 0;
  std::int64_t when_true = 0;

  bool allows(std::int64_t count) const { return count == when_false || count == when_true; }
};

/// Admissible source counts of variable column i: {7p/3, 7p/3 + 2 b_i}, both
/// raised by 2((p/3 - 1) - |C|) for column 1, which carries the padding holes.
ColumnQuota column_quota(int column, int p, int occurrences, int num_clauses);

struct Band {
  int top = 0;                   // obstacle rows are top and top + 1
  std::vector<int> holes;        // x positions, ascending
  std::optional<int> clause;     // 0-based clause index; empty for padding
  std::vector<int> variables;    // variable of each hole (clause bands only)
};

struct AbstractLayout {
  LayoutDims dims;
  std::vector<Band> bands;
  std::vector<int> occurrences;  // b_j per variable, index j-1
};

/// Hole column of variable j.
inline int hole_x(int variable) { return 6 * (variable - 1) + 2; }
/// Inclusive grid-column span [first, last] owned by variable j.
inline std::pair<int, int> column_span(int variable) { return {6 * (variable - 1) + 1, 6 * variable + 1}; }

struct Reduction {
  Instance instance;
  AbstractLayout layout;
};

Reduction build_instance(const PositiveCnf& cnf);

/// Full source rows plus connector pairs: one through every clause-band hole
/// of every true variable, and one through x = 2 in each padding band.
/// Assignments that are not one-in-three leave some clause band crossed zero
/// or several times, which verify_certificate rejects.
Placement assignment_to_placement(const Reduction& red, const Assignment& a);

/// Source count per variable column.
std::vector<std::int64_t> column_counts(int num_vars, const Placement& pl);

struct CertificateResult {
  std::optional<Assignment> assignment;
  std::string reason;  // empty on success
};

/// Checks coverage, connectivity and budget, every column quota, and that each
/// clause band is crossed through exactly one hole with every variable's holes
/// either all used or all unused. On success returns the decoded assignment;
/// variables that occur in no clause decode to false.
CertificateResult check_certificate(const Reduction& red, const PositiveCnf& cnf, const Placement& pl);

std::optional<Assignment> verify_certificate(const Reduction& red, const PositiveCnf& cnf, const Placement& pl);

}  // namespace sgpc
