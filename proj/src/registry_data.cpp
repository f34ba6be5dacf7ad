#include "thom/registry.hpp"

namespace thom {

namespace {

using W = std::vector<Weight>;

SingularityType make(std::string name, int m, int n, int codim, int r, W src, W tgt, W unf, W normal,
                     std::optional<std::string> tp, bool solvable, std::vector<std::string> nf, std::string notes) {
  SingularityType t;
  t.name = std::move(name);
  t.source_dim = m;
  t.target_dim = n;
  t.codim = codim;
  t.torus_rank = r;
  t.source_weights = std::move(src);
  t.target_weights = std::move(tgt);
  t.unfolding_weights = std::move(unf);
  t.normal_weights = std::move(normal);
  t.known_tp = std::move(tp);
  t.solvable = solvable;
  t.normal_form = std::move(nf);
  t.notes = std::move(notes);
  return t;
}

// Rank-1 weight list from scalars.
W s(std::initializer_list<int> xs) {
  W out;
  for (int x : xs) out.push_back({x});
  return out;
}

}  // namespace

Registry builtin_registry() {
  std::vector<SingularityType> v;

  // (2,2)
  v.push_back(make("Regular", 2, 2, 0, 2, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}, {}, {}, "1", true, {"x", "y"},
                   "T^2 scaling x and y independently."));
  v.push_back(make("Fold", 2, 2, 1, 2, {{1, 0}, {0, 1}}, {{1, 0}, {0, 2}}, {}, {{0, 1}}, "cb1", true, {"x", "y^2"},
                   "T^2; the locus is the curve y = 0, normal direction y."));
  v.push_back(make("Cusp", 2, 2, 2, 1, s({2, 1}), s({2, 3}), {}, s({2, 1}), "cb1^2 + cb2", true,
                   {"x", "x*y + y^3"}, "w_x = 2 w_y from xy ~ y^3; point locus."));
  v.push_back(make("Lips/Beaks", 2, 2, 3, 1, s({1, 1}), s({1, 3}), s({2}), s({1, 1, 2}),
                   "-2*c1^3 + 5*c1^2*cp1 - 4*c1*cp1^2 - c1*c2 + c2*cp1 + cp1^3", true, {"x", "y^3 + x^2*y"},
                   "Unfolding (0, a y) has weight 2."));
  v.push_back(make("Swallowtail", 2, 2, 3, 1, s({3, 1}), s({3, 4}), s({2}), s({3, 1, 2}),
                   "cb1^3 + 3*cb1*cb2 + 2*cb3", true, {"x", "x*y + y^4"},
                   "Unfolding y^2 has weight 2. A second published form of this class uses coefficient 1 on cb3;"
                   " the solver output decides between them."));
  v.push_back(make("Goose", 2, 2, 4, 1, s({2, 3}), s({2, 9}), s({6, 4}), s({2, 3, 6, 4}),
                   "2*c1^4 + 5*c1^2*c2 + 4*c2^2 - 7*c1^3*cp1 - 10*c1*c2*cp1 + 9*c1^2*cp1^2 + 5*c2*cp1^2"
                   " - 5*c1*cp1^3 + cp1^4 - 2*c1^2*cp2 - 6*c2*cp2 + 4*c1*cp1*cp2 - 2*cp1^2*cp2 + 2*cp2^2",
                   true, {"x", "y^3 + x^3*y"}, "Unfolding y, x*y (weights 6, 4)."));
  v.push_back(make("Gulls", 2, 2, 4, 1, s({2, 1}), s({2, 4}), s({3, 1}), s({2, 1, 3, 1}),
                   "6*c1^4 - c1^2*c2 - 4*c2^2 - 17*c1^3*cp1 + 4*c1*c2*cp1 + 17*c1^2*cp1^2 - 3*c2*cp1^2"
                   " - 7*c1*cp1^3 + cp1^4 + 2*c1^2*cp2 + 6*c2*cp2 - 4*c1*cp1*cp2 + 2*cp1^2*cp2 - 2*cp2^2",
                   true, {"x", "x*y^2 + y^4"},
                   "Quasi-homogeneous 5-jet representative; unfolding y, y^3 (weights 3, 1)."));
  v.push_back(make("Butterfly", 2, 2, 4, 1, s({4, 1}), s({4, 5}), s({3, 2}), s({4, 1, 3, 2}),
                   "cb1^4 + 6*cb1^2*cb2 + 2*cb2^2 + 9*cb1*cb3 + 6*cb4", false, {"x", "x*y + y^5"},
                   "Closed form only (normal form not quasi-homogeneous). Torus data from the 5-jet"
                   " (x, xy + y^5), unfolding y^2, y^3; used as a constraint source."));
  v.push_back(make("Sharksfin", 2, 2, 4, 1, s({1, 1}), s({2, 2}), s({1, 1}), s({1, 1, 1, 1}), "cb2^2 - cb1*cb3",
                   false, {"x^2", "y^2"},
                   "Closed form only. Constraint data: 2-jet (x^2, y^2) with the diagonal C*, under which"
                   " deformations inside the quadratic pencils have weight 0."));

  // (2,3)
  v.push_back(make("Immersion", 2, 3, 0, 3, {{1, 0, 0}, {0, 1, 0}}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {}, {}, "1",
                   true, {"x", "y", "0"}, "T^3 acting on source and target coordinates."));
  v.push_back(make("S0", 2, 3, 2, 2, {{1, 0}, {0, 1}}, {{1, 0}, {0, 2}, {1, 1}}, {}, {{1, 0}, {0, 1}}, "cb2", true,
                   {"x", "y^2", "x*y"}, "T^2; crosscap, point locus."));
  v.push_back(make("B1", 2, 3, 3, 1, s({1, 1}), s({1, 2, 3}), s({2}), s({1, 1, 2}),
                   "-3*c1^3 + 4*c1*c2 + 4*c1^2*cp1 - 2*c2*cp1 - c1*cp1^2 - 3*c1*cp2 + cp1*cp2 + cp3", true,
                   {"x", "y^2", "y^3 + x^2*y"}, "Unfolding (0, 0, a y) has weight 2. Also named S1 and H1."));
  v.push_back(make("S2", 2, 3, 4, 1, s({2, 3}), s({2, 6, 9}), s({6, 4}), s({2, 3, 6, 4}),
                   "13*c1^4 - 22*c1^2*c2 + 3*c2^2 - 21*c1^3*cp1 + 19*c1*c2*cp1 + 9*c1^2*cp1^2 - 3*c2*cp1^2"
                   " - c1*cp1^3 + 14*c1^2*cp2 - 4*c2*cp2 - 9*c1*cp1*cp2 + cp1^2*cp2 + cp2^2 - 6*c1*cp3 + 2*cp1*cp3",
                   true, {"x", "y^2", "y^3 + x^3*y"}, "Unfolding x^i y, i < 2."));
  v.push_back(make("B2", 2, 3, 4, 1, s({2, 1}), s({2, 2, 5}), s({4, 2}), s({2, 1, 4, 2}),
                   "11*c1^4 - 22*c1^2*c2 + c2^2 - 17*c1^3*cp1 + 21*c1*c2*cp1 + 7*c1^2*cp1^2 - 5*c2*cp1^2"
                   " - c1*cp1^3 + 10*c1^2*cp2 - 5*c1*cp1*cp2 + cp1^2*cp2 - cp2^2 - 10*c1*cp3 + 4*cp1*cp3",
                   true, {"x", "y^2", "x^2*y + y^5"}, "Unfolding y, y^3."));
  v.push_back(make("H2", 2, 3, 4, 1, s({4, 1}), s({4, 3, 5}), s({2, 3}), s({4, 1, 2, 3}),
                   "cb2^2 + cb1*cb3 + 2*cb4", true, {"x", "y^3", "x*y + y^5"},
                   "Unfolding (0, y, 0) and y^2 in the last component."));
  v.push_back(make("S3", 2, 3, 5, 1, s({1, 2}), s({1, 4, 6}), s({4, 3, 2}), s({1, 2, 4, 3, 2}),
                   "-71*c1^5 + 149*c1^3*c2 - 48*c1*c2^2 + 132*c1^4*cp1 - 174*c1^2*c2*cp1 + 20*c2^2*cp1"
                   " - 76*c1^3*cp1^2 + 53*c1*c2*cp1^2 + 16*c1^2*cp1^3 - 4*c2*cp1^3 - c1*cp1^4 - 82*c1^3*cp2"
                   " + 53*c1*c2*cp2 + 75*c1^2*cp1*cp2 - 17*c2*cp1*cp2 - 18*c1*cp1^2*cp2 + cp1^3*cp2"
                   " - 11*c1*cp2^2 + 3*cp1*cp2^2 + 39*c1^2*cp3 - 9*c2*cp3 - 24*c1*cp1*cp3 + 3*cp1^2*cp3 + 3*cp2*cp3",
                   true, {"x", "y^2", "y^3 + x^4*y"}, "Unfolding x^i y, i < 3."));
  v.push_back(make("B3", 2, 3, 5, 1, s({3, 1}), s({3, 2, 7}), s({6, 4, 2}), s({3, 1, 6, 4, 2}),
                   "-110*c1^5 + 286*c1^3*c2 - 76*c1*c2^2 + 192*c1^4*cp1 - 356*c1^2*c2*cp1 + 32*c2^2*cp1"
                   " - 104*c1^3*cp1^2 + 134*c1*c2*cp1^2 + 24*c1^2*cp1^3 - 16*c2*cp1^3 - 2*c1*cp1^4"
                   " - 100*c1^3*cp2 + 54*c1*c2*cp2 + 70*c1^2*cp1*cp2 - 18*c2*cp1*cp2 - 20*c1*cp1^2*cp2"
                   " + 2*cp1^3*cp2 + 10*c1*cp2^2 - 2*cp1*cp2^2 + 106*c1^2*cp3 - 6*c2*cp3 - 72*c1*cp1*cp3"
                   " + 14*cp1^2*cp3 - 6*cp2*cp3",
                   true, {"x", "y^2", "x^2*y + y^7"}, "Unfolding y, y^3, y^5."));
  v.push_back(make("H3", 2, 3, 5, 1, s({7, 1}), s({7, 3, 8}), s({2, 6, 3}), s({7, 1, 2, 6, 3}),
                   "-48*c1^5 + 156*c1^3*c2 - 90*c1*c2^2 + 80*c1^4*cp1 - 182*c1^2*c2*cp1 + 42*c2^2*cp1"
                   " - 36*c1^3*cp1^2 + 48*c1*c2*cp1^2 + 4*c1^2*cp1^3 - 2*c2*cp1^3 - 60*c1^3*cp2 + 84*c1*c2*cp2"
                   " + 46*c1^2*cp1*cp2 - 26*c2*cp1*cp2 - 6*c1*cp1^2*cp2 - 12*c1*cp2^2 + 2*cp1*cp2^2"
                   " + 45*c1^2*cp3 - 27*c2*cp3 - 27*c1*cp1*cp3 + 2*cp1^2*cp3 + 9*cp2*cp3",
                   true, {"x", "y^3", "x*y + y^8"}, "Unfolding (0, y, 0), y^2, y^5."));
  v.push_back(make("C3", 2, 3, 5, 1, s({1, 1}), s({1, 2, 4}), s({3, 2, 1}), s({1, 1, 3, 2, 1}),
                   "-33*c1^5 + 66*c1^3*c2 - 3*c1*c2^2 + 62*c1^4*cp1 - 85*c1^2*c2*cp1 + c2^2*cp1"
                   " - 38*c1^3*cp1^2 + 36*c1*c2*cp1^2 + 10*c1^2*cp1^3 - 5*c2*cp1^3 - c1*cp1^4 - 30*c1^3*cp2"
                   " + 25*c1^2*cp1*cp2 - 8*c1*cp1^2*cp2 + cp1^3*cp2 + 3*c1*cp2^2 - cp1*cp2^2 + 30*c1^2*cp3"
                   " - 22*c1*cp1*cp3 + 4*cp1^2*cp3",
                   true, {"x", "y^2", "x*y^3 + x^3*y"}, "Unfolding y, x y, x^2 y."));
  v.push_back(make("P3", 2, 3, 5, 1, s({2, 1}), s({2, 3, 4}), s({3, 2, 0}), s({2, 1, 3, 2, 0}),
                   "-16*c1^5 + 48*c1^3*c2 - 24*c1*c2^2 + 28*c1^4*cp1 - 58*c1^2*c2*cp1 + 11*c2^2*cp1"
                   " - 14*c1^3*cp1^2 + 17*c1*c2*cp1^2 + 2*c1^2*cp1^3 - c2*cp1^3 - 20*c1^3*cp2 + 24*c1*c2*cp2"
                   " + 17*c1^2*cp1*cp2 - 8*c2*cp1*cp2 - 3*c1*cp1^2*cp2 - 4*c1*cp2^2 + cp1*cp2^2 + 14*c1^2*cp3"
                   " - 6*c2*cp3 - 9*c1*cp1*cp3 + cp1^2*cp3 + 2*cp2*cp3",
                   false, {"x", "x*y + y^3", "x*y^2 + y^4"},
                   "Unimodal; normal form shown at modulus value 1. Unfolding y, y^2 and the modulus y^4"
                   " of weight 0, so there is no principal equation."));

  // (3,3)
  v.push_back(make("A0", 3, 3, 0, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {}, {},
                   "1", true, {"x", "y", "z"}, "T^3."));
  v.push_back(make("A1", 3, 3, 1, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}, {},
                   {{0, 0, 1}}, "cb1", true, {"x", "y", "z^2"}, "T^3; normal direction z."));
  v.push_back(make("A2", 3, 3, 2, 2, {{1, 0}, {0, 2}, {0, 1}}, {{1, 0}, {0, 2}, {0, 3}}, {}, {{0, 2}, {0, 1}},
                   "cb1^2 + cb2", true, {"x", "y", "y*z + z^3"}, "T^2; curve locus, normal directions y, z."));
  v.push_back(make("A3", 3, 3, 3, 1, s({2, 3, 1}), s({2, 3, 4}), {}, s({2, 3, 1}), "cb1^3 + 3*cb1*cb2 + 2*cb3", true,
                   {"x", "y", "y*z + x*z^2 + z^4"}, "Point locus, no unfolding needed."));
  v.push_back(make("A4", 3, 3, 4, 1, s({3, 4, 1}), s({3, 4, 5}), s({2}), s({3, 4, 1, 2}),
                   "cb1^4 + 6*cb1^2*cb2 + 2*cb2^2 + 9*cb1*cb3 + 6*cb4", true, {"x", "y", "y*z + x*z^2 + z^5"},
                   "Unfolding z^3 has weight 2."));
  v.push_back(make("C", 3, 3, 4, 2, {{2, 0}, {0, 2}, {1, 1}}, {{2, 0}, {0, 2}, {3, 3}}, {{2, 2}},
                   {{2, 0}, {0, 2}, {1, 1}, {2, 2}}, "2*c1^4 + c1^2*c2 - 2*c2^2 + 3*c1*c3 - 7*c1^3*cp1 - 3*c3*cp1 + 9*c1^2*cp1^2 - c2*cp1^2"
                 " - 5*c1*cp1^3 + cp1^4 - 2*c1^2*cp2 + 4*c2*cp2 + 2*c1*cp1*cp2 - 2*cp2^2 - 2*c1*cp3 + 2*cp1*cp3", true, {"x", "y", "z^3 + x*y*z"},
                   "Coordinates with x^2 + y^2 replaced by x y; unfolding z of weight (2,2)."));
  v.push_back(make("D", 3, 3, 4, 1, s({1, 3, 1}), s({1, 3, 4}), s({2}), s({1, 3, 1, 2}),
                   "18*c1^4 - 21*c1^2*c2 - 2*c2^2 + 8*c1*c3 - 45*c1^3*cp1 + 31*c1*c2*cp1 - 6*c3*cp1"
                   " + 40*c1^2*cp1^2 - 12*c2*cp1^2 - 15*c1*cp1^3 + 2*cp1^4 + 13*c1^2*cp2 + 4*c2*cp2"
                   " - 17*c1*cp1*cp2 + 6*cp1^2*cp2 - 2*cp2^2 - 8*c1*cp3 + 6*cp1*cp3",
                   true, {"x", "y", "y*z + z^4 + x^2*z^2"}, "Unfolding z^2 has weight 2."));
  v.push_back(make("I22", 3, 3, 4, 1, s({1, 1, 1}), s({1, 2, 2}), s({1}), s({1, 1, 1, 1}), "cb2^2 - cb1*cb3", false,
                   {"x", "y*z", "y^2 + z^2 + x*y"}, "Closed form only; diagonal torus, one unfolding direction."));
  return Registry(std::move(v));
}

}  // namespace thom
