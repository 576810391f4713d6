#include <gtest/gtest.h>

#include "liewidth/almost_commuting.hpp"

using namespace liewidth;

namespace {

const LieAlg& sl2() {
  static const LieAlg L = LieAlg::build(Family::SL, 2);
  return L;
}
const LieAlg& sl3() {
  static const LieAlg L = LieAlg::build(Family::SL, 3);
  return L;
}
const LieAlg& sp2() {
  static const LieAlg L = LieAlg::build(Family::SP, 1);
  return L;
}

// (h, e, (1,0)^T, (0,-2)): [h,e] = 2e and ij = [[0,-2],[0,0]] cancel exactly.
ACTuple sl2_example_tuple() {
  return ACTuple::type_a(Elem::basis(sl2(), 2), Elem::basis(sl2(), 0), VectorRat{1, 0},
                         VectorRat{0, -2});
}

// (h/2, -e, (1,0)): [h/2,-e] = -e and i^2 = e cancel.
ACTuple sp2_example_tuple() {
  const Elem h = Elem::from_matrix(sp2(), MatrixRat{{1, 0}, {0, -1}});
  const Elem e = Elem::from_matrix(sp2(), MatrixRat{{0, 1}, {0, 0}});
  return ACTuple::type_c(Rational(1, 2) * h, -e, VectorRat{1, 0});
}

// Member tuple of M_n with x, y upper triangular: x gets a fixed distinct
// traceless diagonal plus random strictly upper entries, i and j are scaled
// unit vectors with p < q, and y solves [x, y] = -ij over the strictly upper
// triangle (unique since the diagonal of x is distinct).
ACTuple random_member_tuple(const LieAlg& L, std::size_t p, std::size_t q, SeededRng& rng) {
  const std::size_t n = L.matrix_size();
  MatrixRat x(n, n);
  const long mid = static_cast<long>(n - 1);
  for (std::size_t r = 0; r < n; ++r) x(r, r) = Rational(2 * static_cast<long>(r) - mid);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) x(r, c) = Rational(rng.uniform_int(-2, 2));

  VectorRat i(n), j(n);
  i[p] = Rational(rng.uniform_int(1, 3));
  j[q] = Rational(rng.uniform_int(1, 3));

  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) slots.emplace_back(r, c);
  MatrixRat sys(slots.size(), slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) {
    MatrixRat unit(n, n);
    unit(slots[k].first, slots[k].second) = 1;
    const MatrixRat br = commutator(x, unit);
    for (std::size_t row = 0; row < slots.size(); ++row)
      sys(row, k) = br(slots[row].first, slots[row].second);
  }
  VectorRat rhs(slots.size());
  const MatrixRat target = -MatrixRat::outer(i, j);
  for (std::size_t row = 0; row < slots.size(); ++row)
    rhs[row] = target(slots[row].first, slots[row].second);
  const auto sol = solve_particular(sys, rhs);
  EXPECT_TRUE(sol.has_value());
  MatrixRat y(n, n);
  for (std::size_t k = 0; k < slots.size(); ++k) y(slots[k].first, slots[k].second) = (*sol)[k];

  return ACTuple::type_a(Elem::from_matrix(L, x), Elem::from_matrix(L, y), std::move(i),
                         std::move(j));
}

}  // namespace

TEST(SpSquare, Sp2Examples) {
  EXPECT_EQ(sp_square(sp2(), VectorRat{1, 0}).matrix(), (MatrixRat{{0, 1}, {0, 0}}));
  EXPECT_TRUE(sp_square(sp2(), VectorRat{0, 0}).is_zero());
  EXPECT_EQ(sp_square(sp2(), VectorRat{0, 1}).matrix(), (MatrixRat{{0, 0}, {-1, 0}}));
  EXPECT_THROW(sp_square(sp2(), VectorRat{1, 0, 0}), std::invalid_argument);
}

TEST(SpSquare, OutputSatisfiesSpIdentity) {
  const LieAlg sp4 = LieAlg::build(Family::SP, 2);
  SeededRng rng(21);
  for (int t = 0; t < 20; ++t) {
    VectorRat i(4);
    for (auto& c : i) c = Rational(rng.uniform_int(-3, 3));
    const MatrixRat m = sp_square(sp4, i).matrix();
    EXPECT_TRUE((m.transpose() * *sp4.omega() + *sp4.omega() * m).is_zero());
  }
}

TEST(AcMember, Examples) {
  // y = i = j = 0 is trivially a member for any x.
  SeededRng rng(22);
  const Elem x = random_elem(sl2(), 3, rng);
  const ACTuple trivial = ACTuple::type_a(x, Elem::zero(sl2()), VectorRat(2), VectorRat(2));
  EXPECT_TRUE(ac_member(trivial).member);

  EXPECT_TRUE(ac_member(sl2_example_tuple()).member);
  EXPECT_TRUE(ac_member(sp2_example_tuple()).member);

  // Breaking j exposes the residual [h,e] + ij = 2e + 0.
  ACTuple broken = sl2_example_tuple();
  broken.j = VectorRat{0, 0};
  const auto check = ac_member(broken);
  EXPECT_FALSE(check.member);
  EXPECT_EQ(check.residual, (MatrixRat{{0, 2}, {0, 0}}));
}

TEST(GroupAct, IdentityFixes) {
  const ACTuple t = sl2_example_tuple();
  const ACTuple u = group_act(MatrixRat::identity(2), t);
  EXPECT_EQ(u.x, t.x);
  EXPECT_EQ(u.y, t.y);
  EXPECT_EQ(u.i, t.i);
  EXPECT_EQ(*u.j, *t.j);
}

TEST(GroupAct, ElementaryUnipotentPreservesMembership) {
  MatrixRat g = MatrixRat::identity(2);
  g(0, 1) = 1;  // I + E_12
  const ACTuple u = group_act(g, sl2_example_tuple());
  EXPECT_TRUE(ac_member(u).member);
}

TEST(GroupAct, RandomGroupElementsPreserveMembership) {
  SeededRng rng(23);
  ACTuple a = sl2_example_tuple();
  for (int t = 0; t < 30; ++t) {
    a = group_act(random_unipotent(2, 4, 2, rng), a);
    EXPECT_TRUE(ac_member(a).member);
  }
  ACTuple c = sp2_example_tuple();
  for (int t = 0; t < 30; ++t) {
    c = group_act(random_symplectic(sp2(), 3, 2, rng), c);
    EXPECT_TRUE(ac_member(c).member);
  }
}

TEST(GroupAct, RejectsBadGroupElements) {
  MatrixRat nonsymp(2, 2);
  nonsymp(0, 0) = 2;
  nonsymp(1, 1) = 1;  // diag(2,1): g^T Omega g = 2 Omega
  EXPECT_THROW(group_act(nonsymp, sp2_example_tuple()), std::invalid_argument);
  EXPECT_THROW(group_act(MatrixRat(2, 2), sl2_example_tuple()), std::invalid_argument);
}

TEST(GroupAct, SymplecticGeneratorsAreExact) {
  const LieAlg sp4 = LieAlg::build(Family::SP, 2);
  SeededRng rng(24);
  for (int t = 0; t < 10; ++t) {
    const MatrixRat g = random_symplectic(sp4, 4, 2, rng);
    EXPECT_EQ(g.transpose() * *sp4.omega() * g, *sp4.omega());
  }
}

TEST(SimTriangularizable, Examples) {
  MatrixRat e12(3, 3), e23(3, 3);
  e12(0, 1) = 1;
  e23(1, 2) = 1;
  EXPECT_TRUE(sim_triangularizable(Elem::from_matrix(sl3(), e12), Elem::from_matrix(sl3(), e23)));
  EXPECT_FALSE(sim_triangularizable(Elem::basis(sl2(), 0), Elem::basis(sl2(), 1)));
  SeededRng rng(25);
  const Elem a = random_elem(sl3(), 3, rng);
  EXPECT_TRUE(sim_triangularizable(a, a));
}

TEST(TorusLimit, Sl2ExampleConvergesToSemisimplePart) {
  const auto lim = torus_limit(sl2_example_tuple());
  ASSERT_TRUE(lim.converges);
  ASSERT_TRUE(lim.limit.has_value());
  EXPECT_EQ(lim.limit->x, Elem::basis(sl2(), 2));  // h survives on the diagonal
  EXPECT_TRUE(lim.limit->y.is_zero());             // e carried exponent +2
  EXPECT_TRUE(lim.limit->i.is_zero());             // i_1 carried exponent +1
  EXPECT_TRUE(lim.limit->j->is_zero());            // j_2 carried exponent +1
  EXPECT_TRUE(ac_member(*lim.limit).member);
}

TEST(TorusLimit, DiagonalTupleIsFixed) {
  const Elem h = Elem::basis(sl2(), 2);
  const ACTuple t = ACTuple::type_a(h, Rational(3) * h, VectorRat(2), VectorRat(2));
  const auto lim = torus_limit(t);
  ASSERT_TRUE(lim.converges);
  EXPECT_EQ(lim.limit->x, t.x);
  EXPECT_EQ(lim.limit->y, t.y);
}

TEST(TorusLimit, DivergentPositionReported) {
  // i = (0,1): exponent n+1-2p = -1 at the second slot.
  const ACTuple t = ACTuple::type_a(Elem::basis(sl2(), 2), Elem::basis(sl2(), 0),
                                    VectorRat{0, 1}, VectorRat{0, 0});
  const auto lim = torus_limit(t);
  EXPECT_FALSE(lim.converges);
  ASSERT_EQ(lim.divergent_positions.size(), 1u);
  EXPECT_EQ(lim.divergent_positions[0].component, "i");
  EXPECT_EQ(lim.divergent_positions[0].row, 1u);
  EXPECT_EQ(lim.divergent_positions[0].exponent, -1);
}

TEST(TorusLimit, RequiresUpperTriangularInput) {
  const ACTuple t = ACTuple::type_a(Elem::basis(sl2(), 1), Elem::zero(sl2()),  // f is lower
                                    VectorRat(2), VectorRat(2));
  EXPECT_THROW(torus_limit(t), std::invalid_argument);
}

TEST(TorusLimit, ConvergedMemberLimitsAreDiagonalMembers) {
  // sl3: single-entry supports with p < q always converge (no negative slot is
  // reachable), and the middle slot can survive at exponent zero. sl4 reaches
  // both outcomes: i in row 2 or j in column 1 carries exponent -1.
  const LieAlg sl4 = LieAlg::build(Family::SL, 4);
  SeededRng rng(26);
  int converged = 0, divergent = 0;
  for (int t = 0; t < 40; ++t) {
    const LieAlg& L = t % 2 ? sl4 : sl3();
    const std::size_t n = L.matrix_size();
    const auto p = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 2));
    const auto q = static_cast<std::size_t>(
        rng.uniform_int(static_cast<std::int64_t>(p) + 1, static_cast<std::int64_t>(n) - 1));
    const ACTuple tup = random_member_tuple(L, p, q, rng);
    ASSERT_TRUE(ac_member(tup).member);
    EXPECT_TRUE(sim_triangularizable(tup.x, tup.y));
    const auto lim = torus_limit(tup);
    if (!lim.converges) {
      ++divergent;
      EXPECT_FALSE(lim.divergent_positions.empty());
      continue;
    }
    ++converged;
    const ACTuple& l = *lim.limit;
    EXPECT_TRUE(ac_member(l).member);
    const MatrixRat lx = l.x.matrix(), ly = l.y.matrix();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (r != c) {
          EXPECT_TRUE(lx(r, c).is_zero());
          EXPECT_TRUE(ly(r, c).is_zero());
        }
    // Surviving i/j entries sit at exponent-zero slots only.
    for (std::size_t r = 0; r < n; ++r)
      if (!l.i[r].is_zero()) EXPECT_EQ(static_cast<std::int64_t>(n) - 1 - 2 * static_cast<std::int64_t>(r), 0);
    for (std::size_t c = 0; c < n; ++c)
      if (!(*l.j)[c].is_zero()) EXPECT_EQ(2 * static_cast<std::int64_t>(c) + 1 - static_cast<std::int64_t>(n), 0);
  }
  EXPECT_GT(converged, 0);
  EXPECT_GT(divergent, 0);  // sl4: i in row 2 or j in column 1 diverges
}

TEST(CommutatorOfUpperTriangulars, HasZeroDiagonal) {
  SeededRng rng(27);
  for (int t = 0; t < 20; ++t) {
    MatrixRat x(4, 4), y(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = r; c < 4; ++c) {
        x(r, c) = Rational(rng.uniform_int(-3, 3));
        y(r, c) = Rational(rng.uniform_int(-3, 3));
      }
    const MatrixRat br = commutator(x, y);
    for (std::size_t r = 0; r < 4; ++r) EXPECT_TRUE(br(r, r).is_zero());
  }
}

TEST(ACTuple, ShapeValidation) {
  EXPECT_THROW(ACTuple::type_a(Elem::basis(sl2(), 0), Elem::basis(sl2(), 1), VectorRat(3),
                               VectorRat(2)),
               std::invalid_argument);
  EXPECT_THROW(ACTuple::type_c(Elem::basis(sl2(), 0), Elem::basis(sl2(), 1), VectorRat(2)),
               std::invalid_argument);  // sl parent for type C
}
