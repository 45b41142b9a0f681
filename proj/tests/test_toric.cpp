#include <gtest/gtest.h>

#include "amitsur.hpp"

using namespace amitsur;

namespace {

IntegerMatrix m(const std::vector<IntVector>& rows) { return IntegerMatrix::from_rows(rows); }

const ToricVariety& dp6v() {
  static const ToricVariety v = dp6_variety();
  return v;
}

// Column space of the rays and the kernel of tdiv_to_pic coincide.
void expect_exact(const ToricPicard& tp) {
  const IntegerMatrix composite = tp.tdiv_to_pic * tp.m_to_tdiv;
  EXPECT_TRUE(composite.is_zero());
  EXPECT_EQ(tp.tdiv_to_pic * tp.pic_to_tdiv, IntegerMatrix::identity(tp.pic_rank));
  EXPECT_EQ(kernel_basis(tp.tdiv_to_pic), image(tp.m_to_tdiv, Sublattice::full(tp.fan.lattice_rank)));
}

}  // namespace

TEST(Validate, Examples) {
  const auto p2 = validate(projective_plane());
  EXPECT_EQ(p2.pic_rank, 1u);
  EXPECT_EQ(p2.classes.size(), 1u);
  EXPECT_EQ(p2.classes[0].multiplicity(), 3u);
  const auto f1 = validate(hirzebruch(1));
  EXPECT_EQ(f1.pic_rank, 2u);
  EXPECT_EQ(f1.classes.size(), 3u);
  const auto d = validate(dp6());
  EXPECT_EQ(d.pic_rank, 4u);
  EXPECT_EQ(d.classes.size(), 6u);
  const auto pp = validate(projective_product_fan(2, 2));
  EXPECT_EQ(pp.pic_rank, 2u);
  EXPECT_EQ(pp.classes.size(), 2u);
}

TEST(Validate, SequenceIsExactAndMultiplicitiesSum) {
  for (const Fan& fan : {projective_plane(), hirzebruch(0), hirzebruch(3), dp6(), projective_product_fan(1, 3),
                         projective_product_fan(3, 1), projective_product_fan(2, 2)}) {
    const auto tp = validate(fan);
    expect_exact(tp);
    std::size_t total = 0;
    for (const auto& c : tp.classes) total += c.multiplicity();
    EXPECT_EQ(total, fan.rays.size());
    for (std::size_t k = 0; k < tp.pic_rank; ++k) {
      IntVector unit(tp.pic_rank);
      unit[k] = 1;
      EXPECT_EQ(tp.ray_classes[tp.basis_rays[k]], unit);
    }
  }
}

TEST(Validate, InvalidFans) {
  EXPECT_THROW(validate(Fan{2, {{2, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}}), NonPrimitiveRay);
  EXPECT_THROW(validate(Fan{2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}}), NotSmooth);
  EXPECT_THROW(validate(Fan{2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}}}), NotComplete);
  EXPECT_THROW(validate(Fan{2, {{1, 0}, {0, 1}}, {{0, 1}}}), NotComplete);
  EXPECT_THROW(validate(Fan{2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 5}}}), InvalidFan);
  EXPECT_THROW(validate(Fan{2, {{1, 0}, {1, 0}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}}), InvalidFan);
  EXPECT_THROW(validate(Fan{0, {}, {}}), InvalidFan);
  // Missing a cone of P^1 x P^1 x P^1.
  Fan broken = projective_product_fan(1, 3);
  broken.max_cones.pop_back();
  EXPECT_THROW(validate(broken), NotComplete);
}

TEST(Automorphisms, Orders) {
  EXPECT_EQ(dp6v().symmetries.lattice_group.order(), 12u);
  EXPECT_EQ(dp6v().symmetries.pic_action.order(), 12u);
  EXPECT_EQ(projective_plane_variety().symmetries.lattice_group.order(), 6u);
  EXPECT_EQ(projective_plane_variety().symmetries.pic_action.order(), 1u);
  for (int e = 1; e <= 4; ++e) {
    const auto v = hirzebruch_variety(e);
    EXPECT_EQ(v.symmetries.lattice_group.order(), 2u);
    EXPECT_EQ(v.symmetries.pic_action.order(), 1u);
    EXPECT_EQ(v.symmetries.kernel_size, 2u);
  }
  const auto f0 = hirzebruch_variety(0);
  EXPECT_EQ(f0.symmetries.lattice_group.order(), 8u);
  EXPECT_EQ(f0.symmetries.pic_action.order(), 2u);
  EXPECT_EQ(projective_product(1, 2).symmetries.lattice_group.order(), 8u);
  EXPECT_EQ(projective_product(2, 2).symmetries.pic_action.order(), 2u);
}

TEST(Automorphisms, NamedGeneratorsComeFirst) {
  const auto& sym = dp6v().symmetries;
  EXPECT_EQ(sym.generator_names, (std::vector<std::string>{"s", "r"}));
  EXPECT_EQ(sym.lattice_group.generators()[1], m({{0, 1}, {-1, 1}}));
  EXPECT_THROW(toric_surface("bad", dp6(), {{"x", m({{1, 1}, {0, 1}})}}), InvalidFan);
}

TEST(Automorphisms, PreserveIntersectionAndCanonicalClass) {
  for (const auto& v : {dp6_variety(), hirzebruch_variety(0), hirzebruch_variety(3), projective_plane_variety()}) {
    const IntegerMatrix form = pic_intersection(v.picard);
    const IntVector k = canonical_class(v.picard);
    for (const auto& g : v.symmetries.pic_action.elements()) {
      EXPECT_EQ(g.transpose() * form * g, form) << v.name;
      EXPECT_EQ(g * k, k) << v.name;
    }
  }
}

TEST(Intersection, Hirzebruch) {
  for (int e = 0; e <= 5; ++e) {
    const auto tp = validate(hirzebruch(e));
    const IntegerMatrix q = surface_intersection(tp);
    // Rays u0 = (1,0), u1 = (0,1), u2 = (-1,e), u3 = (0,-1). D0 ~ D2 is the fibre F, D1 the negative section.
    EXPECT_EQ(q(0, 0), 0);
    EXPECT_EQ(q(1, 1), -e);
    EXPECT_EQ(q(3, 3), e);
    EXPECT_EQ(q(0, 3), 1);
    const IntVector k = canonical_class(tp);
    EXPECT_EQ(dot(k, pic_intersection(tp), k), 8);
  }
}

TEST(Intersection, Dp6AndP2) {
  const auto& tp = dp6v().picard;
  const IntVector k = canonical_class(tp);
  EXPECT_EQ(dot(k, pic_intersection(tp), k), 6);
  for (const auto& c : tp.ray_classes) EXPECT_EQ(dot(c, pic_intersection(tp), c), -1);
  const auto p2 = validate(projective_plane());
  EXPECT_EQ(pic_intersection(p2), m({{1}}));
  EXPECT_EQ(canonical_class(p2), (IntVector{-3}));
  EXPECT_THROW(surface_intersection(validate(projective_product_fan(1, 3))), NotASurface);
}

TEST(Chi, Hirzebruch) {
  // F = [D0], H = [D1] with H^2 = -e.
  for (int e = 0; e <= 4; ++e) {
    const auto v = hirzebruch_variety(e);
    const auto& tp = v.picard;
    const IntVector f = tp.ray_classes[0], h = tp.ray_classes[1];
    for (int a = -3; a <= 3; ++a)
      for (int b = -3; b <= 3; ++b) {
        const IntVector d = a * f + b * h;
        // chi(aF + bH) = (a+1)(b+1) - e b(b+1)/2.
        EXPECT_EQ(eval(v.chi, d), Integer((a + 1) * (b + 1)) - Integer(e * b * (b + 1) / 2)) << e;
      }
  }
}

TEST(Chi, ProjectivePlaneAndProducts) {
  const auto p2 = projective_plane_variety();
  for (int k = -4; k <= 4; ++k) EXPECT_EQ(eval(p2.chi, {k}), binomial(Integer(k + 2), 2));
  const auto pp = projective_product(2, 2);
  EXPECT_EQ(eval(pp.chi, {1, 1}), 9);
  EXPECT_EQ(eval(pp.chi, {-1, 5}), 0);
  EXPECT_EQ(eval(pp.chi, {0, 0}), 1);
}

TEST(Chi, Dp6RestrictedToSr3) {
  const auto& v = dp6v();
  const auto j = select_subgroup(v.symmetries, "sr^3");
  const auto& tp = v.picard;
  const IntVector e1 = tp.ray_classes[0], e2 = tp.ray_classes[1], e3 = tp.ray_classes[2];
  const IntVector l1 = tp.ray_classes[3], l3 = tp.ray_classes[5];
  const IntVector h = l1 + e2 + e3;
  const IntVector a = h - e3;
  const IntVector b = e3 + l3;  // H - E1 - E2 + E3
  EXPECT_EQ(b, h - e1 - e2 + e3);
  for (const auto& g : j.elements()) {
    EXPECT_EQ(g * a, a);
    EXPECT_EQ(g * b, b);
  }
  // H - E1 - E2 - E3 is not fixed, so it cannot be the second basis vector.
  const IntVector minus = h - e1 - e2 - e3;
  EXPECT_FALSE(contains(fixed_lattice(j), minus));
  EXPECT_EQ(span({a, b}, 4), fixed_lattice(j));
  const auto restricted = restrict(v.chi, IntegerMatrix::from_columns(4, {a, b}));
  for (int mm = -2; mm <= 2; ++mm)
    for (int n = -2; n <= 2; ++n) EXPECT_EQ(eval(restricted, {mm, n}), Integer(2 * mm * n - n * n + mm + n + 1));
}

TEST(Certificate, Examples) {
  EXPECT_TRUE(amT_equals_amChi_certificate(dp6v().picard));
  EXPECT_TRUE(amT_equals_amChi_certificate(validate(projective_plane())));
  EXPECT_FALSE(amT_equals_amChi_certificate(validate(hirzebruch(2))));
  EXPECT_FALSE(amT_equals_amChi_certificate(validate(hirzebruch(1))));
  EXPECT_TRUE(amT_equals_amChi_certificate(validate(hirzebruch(0))));
}

TEST(AmT, Examples) {
  const auto p2 = projective_plane_variety();
  EXPECT_EQ(am_T(p2.picard, p2.symmetries, trivial_group(1)).group.to_string(), "Z/3Z");
  for (int e = 1; e <= 6; ++e) {
    const auto v = hirzebruch_variety(e);
    EXPECT_EQ(am_T(v.picard, v.symmetries, v.symmetries.pic_action).group.to_string(), e % 2 == 0 ? "Z/2Z" : "0");
  }
  const auto f0 = hirzebruch_variety(0);
  EXPECT_EQ(am_T(f0.picard, f0.symmetries, trivial_group(2)).group.to_string(), "(Z/2Z)^2");
  EXPECT_EQ(am_T(f0.picard, f0.symmetries, f0.symmetries.pic_action).group.to_string(), "Z/2Z");
  EXPECT_THROW(am_T(p2.picard, p2.symmetries, trivial_group(2)), NotASubgroup);
}

// Where the certificate holds the two groups agree on every subgroup.
TEST(AmT, EqualsAmChiWhenCertified) {
  for (const auto& v : {dp6_variety(), projective_plane_variety(), hirzebruch_variety(0)}) {
    ASSERT_TRUE(amT_equals_amChi_certificate(v.picard, v.chi));
    for (const auto& j : subgroups(v.symmetries.pic_action)) {
      const auto t = am_T(v.picard, v.symmetries, j);
      const auto c = am_chi(v.spec(j));
      EXPECT_EQ(t.split_subgroup, c.split_subgroup) << v.name;
      EXPECT_EQ(t.group, c.group) << v.name;
    }
  }
}

TEST(AmT, PicTContainsPicChi) {
  for (int e = 0; e <= 4; ++e) {
    const auto v = hirzebruch_variety(e);
    for (const auto& j : subgroups(v.symmetries.pic_action)) {
      const auto t = am_T(v.picard, v.symmetries, j);
      const auto c = am_chi(v.spec(j));
      EXPECT_TRUE(is_subgroup(c.split_subgroup, t.split_subgroup)) << e;
    }
  }
}

// Am^T of (P^n)^m against the fixed points of the diagonal action on
// (Z/(n+1))^m, counted by brute force.
TEST(AmT, ProjectiveProductsAgainstFixedPoints) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t mm = 1; mm <= 2; ++mm) {
      const auto v = projective_product(n, mm);
      std::vector<LatticeGroupAction> js{trivial_group(mm)};
      if (mm == 2) js.push_back(select_subgroup(v.symmetries, "swap"));
      for (const auto& j : js) {
        const auto t = am_T(v.picard, v.symmetries, j);
        std::size_t fixed = 0, total = 1;
        for (std::size_t i = 0; i < mm; ++i) total *= n + 1;
        for (std::size_t code = 0; code < total; ++code) {
          IntVector x(mm);
          std::size_t c = code;
          for (std::size_t i = 0; i < mm; ++i, c /= n + 1) x[i] = Integer(c % (n + 1));
          bool ok = true;
          for (const auto& g : j.elements()) {
            IntVector y = g * x;
            for (auto& yi : y) yi = floor_mod(yi, Integer(n + 1));
            ok = ok && y == x;
          }
          fixed += ok ? 1 : 0;
        }
        EXPECT_EQ(t.group.free_rank, 0u);
        EXPECT_EQ(t.group.order(), std::optional<Integer>(Integer(fixed))) << n << " " << mm;
        EXPECT_EQ(t.group.count_killed_by(Integer(n + 1)), Integer(fixed));
      }
    }
}

TEST(AmT, CokernelAndOrbitSumsAgreeOnAllBundledFans) {
  // am_T throws InternalMismatch if the cokernel and orbit-sum descriptions differ.
  std::vector<ToricVariety> varieties{dp6_variety(), projective_plane_variety(), projective_product(1, 3),
                                      projective_product(2, 2)};
  for (int e = 0; e <= 6; ++e) varieties.push_back(hirzebruch_variety(e));
  for (const auto& v : varieties)
    for (const auto& j : subgroups(v.symmetries.pic_action)) EXPECT_NO_THROW(am_T(v.picard, v.symmetries, j)) << v.name;
}
