#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "connsets/counting.hpp"
#include "connsets/graph.hpp"

namespace connsets {

namespace family {

struct Path { int n; };
struct Cycle { int n; };
struct Star { int n; };
// Triangle with a path appended; m vertices in total.
struct Tadpole { int m; };
// C_p and C_q joined by a path on r vertices whose ends are identified with
// one vertex of each cycle; r = 1 glues the cycles at a single vertex.
struct Dumbbell { int p, q, r; };
struct TypeII { int p, q; };
// Two hubs joined by internally disjoint paths on a, b, c vertices (hubs
// included); a = 2 is a direct hub-hub edge.
struct Theta { int a, b, c; };
struct An { int n; };
struct Ln { int n; };
struct Bn { int n; };
struct Rn { int n; };
struct Qn { int n; };

enum class Named { E8, E7, E61, E62, E51, E52, A4 };
struct E { Named which; };

}  // namespace family

using FamilySpec =
    std::variant<family::Path, family::Cycle, family::Star, family::Tadpole, family::Dumbbell, family::TypeII,
                 family::Theta, family::An, family::Ln, family::Bn, family::Rn, family::Qn, family::E>;

// Canonical text form, e.g. "L:9", "dumbbell:3,4,2", "theta:2,3,4", "E:6,1".
std::string to_string(const FamilySpec& spec);
// Accepts the canonical form plus long names ("path:5", "tadpole:6") and the
// bare E names ("E8", "E61", "A4"). Throws ParseError naming the offending
// parameter; bounds are checked by validate(), which this calls.
FamilySpec parse_family(std::string_view text);
// Throws ParameterError naming the violated bound.
void validate(const FamilySpec& spec);

int family_order(const FamilySpec& spec);
Graph build(const FamilySpec& spec);
// Counts the source formulas give in closed form; nullopt for dumbbell,
// type II, theta and Q_n (use the counting module for those). The named E
// graphs report their tabulated values.
std::optional<Count> closed_form(const FamilySpec& spec);

family::Theta theta_of(family::Named which);
std::string name_of(family::Named which);

struct EGraphRow {
  family::Named which;
  std::string name;
  Count count;
  Count max_rooted_bound;  // upper bound on N(G)_v over all v
};
const std::vector<EGraphRow>& e_graph_reference();

// Every valid family spec with exactly n vertices (n <= 64), named
// families first. Used for readable "result ~ L_7" annotations.
std::vector<FamilySpec> specs_of_order(int n);
// Name of the first family in specs_of_order(g.order()) isomorphic to g.
std::optional<std::string> identify_family(const Graph& g);

}  // namespace connsets
