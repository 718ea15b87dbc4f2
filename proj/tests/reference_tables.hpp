#pragma once

// Reference Lagrangian subalgebra brackets, entered by hand. The twisted
// table keeps its reference [p2, J] entry; see corrected_twisted_table().

#include "support.hpp"

namespace liebw::test {

inline LieAlgebra hyperbolic_table() {
  return table({"J12", "a1", "a2"}, {{"J12", "a1", "-a2"}, {"J12", "a2", "-a1"}});
}

inline LieAlgebra elliptic_table() {
  return table({"P1", "theta", "a2"}, {{"P1", "theta", "-a2"}, {"P1", "a2", "theta"}});
}

inline LieAlgebra parabolic_table() { return table({"J+", "chi", "a-"}, {{"J+", "chi", "-a-"}}); }

inline const std::vector<std::string>& ads3_labels() {
  static const std::vector<std::string> l{"J", "K1", "K2", "p0", "p1", "p2"};
  return l;
}

inline LieAlgebra linear_table() {
  return table(ads3_labels(), {{"J", "K2", "-K1"},
                               {"J", "K1", "K2"},
                               {"K1", "K2", "-J"},
                               {"p0", "p1", "-p2"},
                               {"p0", "p2", "p1"},
                               {"p1", "p2", "p0"},
                               {"p0", "K2", "p2"},
                               {"p0", "K1", "p1"},
                               {"p1", "J", "-p2"},
                               {"p1", "K1", "p0"},
                               {"p2", "J", "p1"},
                               {"p2", "K2", "p0"}});
}

inline std::vector<TableRow> twisted_rows(const std::string& p2_j) {
  return {{"J", "K2", "-K1"},
          {"J", "K1", "K2"},
          {"K1", "K2", "-J"},
          {"p0", "p2", "-1/2*p0 - 1/2*p1"},
          {"p1", "p2", "-1/2*p0 - 1/2*p1"},
          {"p0", "J", "1/2*K1"},
          {"p0", "K2", "p2 + 1/2*K1"},
          {"p0", "K1", "p1"},
          {"p1", "J", "-p2 - 1/2*K1"},
          {"p1", "K2", "-1/2*K1"},
          {"p1", "K1", "p0"},
          {"p2", "J", p2_j},
          {"p2", "K2", "p0 + 1/2*J - 1/2*K2"}};
}

inline LieAlgebra twisted_table() { return table(ads3_labels(), twisted_rows("1/2*J - 1/2*K2")); }

inline LieAlgebra corrected_twisted_table() { return table(ads3_labels(), twisted_rows("p1 - 1/2*J + 1/2*K2")); }

}  // namespace liebw::test
