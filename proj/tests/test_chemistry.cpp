#include <array>

#include "doctest.h"
#include "mendeleev/chemistry.hpp"
#include "mendeleev/ladders.hpp"

using namespace mendeleev;

TEST_CASE("named families sit in their columns") {
  CHECK(classify_family(1).label == FamilyLabel::AlkaliMetal);
  CHECK(classify_family(2).label == FamilyLabel::AlkalineEarth);
  CHECK(classify_family(9).label == FamilyLabel::Halogen);
  CHECK(classify_family(1).label != FamilyLabel::Halogen);
  CHECK(classify_family(10).label == FamilyLabel::NobleGas);
  CHECK(classify_family(2).label != FamilyLabel::NobleGas);
  CHECK(classify_family(8).label == FamilyLabel::Chalcogen);
  CHECK(classify_family(16).label == FamilyLabel::Chalcogen);
  CHECK(classify_family(17).label == FamilyLabel::Halogen);
  CHECK(classify_family(26).label == FamilyLabel::OtherColumn);
  CHECK(classify_family(26).column == Column{2, 5, -3});

  CHECK(column_of(FamilyLabel::Halogen) == Column{1, 3, 1});
  CHECK_FALSE(column_of(FamilyLabel::OtherColumn).has_value());
}

TEST_CASE("family members walk down the avenue") {
  const auto alkali = family_members(*column_of(FamilyLabel::AlkaliMetal), 7);
  CHECK(alkali == std::vector<AtomicNumber>{1, 3, 11, 19, 37, 55, 87});
  CHECK(noble_gas_closures(7) == std::vector<AtomicNumber>{10, 18, 36, 54, 86, 118});
  CHECK(family_members(Column{0, 1, 1}, 3) == std::vector<AtomicNumber>{2, 4, 12});
  CHECK(family_members(Column{1, 3, 1}, 0).empty());
}

TEST_CASE("family is constant along every SO(2,1) chain") {
  for (AtomicNumber z = 1; z <= 400; ++z) {
    const auto family = classify_family(z);
    HouseAddress h = address_from_z(z);
    for (int i = 0; i < 4; ++i) {
      h = step_so21(h, +1).value();
      CHECK(classify_family(z_from_address(h)) == family);
    }
  }
}

TEST_CASE("series membership") {
  auto check = [](AtomicNumber z, SeriesKind kind, int generation, ZRange range) {
    const auto s = series_membership(z);
    CHECK(s.kind == kind);
    CHECK(s.generation == generation);
    CHECK(s.z_range == range);
  };
  check(57, SeriesKind::InnerTransition, 4, {57, 70});
  check(89, SeriesKind::InnerTransition, 5, {89, 102});
  check(139, SeriesKind::InnerTransition, 6, {139, 152});
  check(26, SeriesKind::Transition, 3, {21, 30});
  check(39, SeriesKind::Transition, 4, {39, 48});
  check(80, SeriesKind::Transition, 5, {71, 80});
  check(112, SeriesKind::Transition, 6, {103, 112});
  check(121, SeriesKind::NewPeriod121to138, 5, {121, 138});
  check(138, SeriesKind::NewPeriod121to138, 5, {121, 138});

  CHECK(series_membership(56).kind == SeriesKind::None);
  CHECK(series_membership(58).kind == SeriesKind::InnerTransition);  // Ce inside, La opens
  CHECK(series_membership(90).generation == 5);                       // Th inside, Ac opens
  CHECK(series_membership(120).kind == SeriesKind::None);
  CHECK(series_membership(153).kind == SeriesKind::None);
  CHECK_FALSE(series_membership(1).sub_block.has_value());
  CHECK(series_name(series_membership(26)) == "iron group");
  CHECK(series_name(series_membership(60)) == "lanthanides");
  CHECK(series_name(series_membership(140)) == "superactinides");
}

TEST_CASE("series ranges are disjoint and equal their block ranges") {
  struct Expect {
    int n;
    int l;
    ZRange range;
  };
  const std::array<Expect, 7> blocks{{{3, 2, {21, 30}},
                                      {4, 2, {39, 48}},
                                      {5, 2, {71, 80}},
                                      {6, 2, {103, 112}},
                                      {4, 3, {57, 70}},
                                      {5, 3, {89, 102}},
                                      {6, 3, {139, 152}}}};
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    CHECK(block_z_range(ShellAddress(blocks[i].n, blocks[i].l)) == blocks[i].range);
    for (AtomicNumber z = blocks[i].range.first; z <= blocks[i].range.last; ++z) {
      CHECK(series_membership(z).z_range == blocks[i].range);
    }
    for (std::size_t k = i + 1; k < blocks.size(); ++k) {
      const bool overlap = blocks[i].range.first <= blocks[k].range.last &&
                           blocks[k].range.first <= blocks[i].range.last;
      CHECK_FALSE(overlap);
    }
  }
}

TEST_CASE("ceric and yttric rare earths") {
  for (AtomicNumber z = 57; z <= 62; ++z) CHECK(rare_earth_subblock(z) == SubBlock::Light);
  for (AtomicNumber z = 63; z <= 70; ++z) CHECK(rare_earth_subblock(z) == SubBlock::Heavy);
  CHECK_FALSE(rare_earth_subblock(26).has_value());
  CHECK_FALSE(rare_earth_subblock(71).has_value());
  CHECK(rare_earth_subblock(94) == SubBlock::Light);
  CHECK(series_membership(62).sub_block == SubBlock::Light);
  CHECK(series_membership(63).sub_block == SubBlock::Heavy);
}

TEST_CASE("Madelung ground-state configurations") {
  CHECK(ground_state_configuration(2).str() == "1s2");
  CHECK(ground_state_configuration(21).str() == "1s2 2s2 2p6 3s2 3p6 4s2 3d1");
  CHECK(ground_state_configuration(57).str() ==
        "1s2 2s2 2p6 3s2 3p6 4s2 3d10 4p6 5s2 4d10 5p6 6s2 4f1");
  CHECK(ground_state_configuration(57).str_with_core(54, "Xe") == "[Xe] 6s2 4f1");
  CHECK(ground_state_configuration(21).str_with_core(18, "Ar") == "[Ar] 4s2 3d1");
  CHECK_THROWS_AS((void)ground_state_configuration(21).str_with_core(19, "?"), std::invalid_argument);
  CHECK_THROWS_AS((void)ground_state_configuration(0), std::domain_error);

  CHECK(noble_gas_core(57) == 54);
  CHECK(noble_gas_core(11) == 10);
  CHECK(noble_gas_core(10) == std::nullopt);
  CHECK(noble_gas_core(87) == 86);
  CHECK(noble_gas_core(119) == 118);
}

TEST_CASE("configuration invariants for Z <= 1000") {
  std::vector<AtomicNumber> p_closures;
  for (AtomicNumber z = 1; z <= 1000; ++z) {
    const auto cfg = ground_state_configuration(z);
    AtomicNumber total = 0;
    for (std::size_t i = 0; i < cfg.occupied.size(); ++i) {
      const auto& occ = cfg.occupied[i];
      total += occ.electrons;
      CHECK(occ.electrons >= 1);
      CHECK(occ.electrons <= shell_capacity(occ.shell));
      if (i + 1 < cfg.occupied.size()) {
        CHECK(occ.electrons == shell_capacity(occ.shell));
        CHECK(compare_shells(occ.shell, cfg.occupied[i + 1].shell) < 0);
      }
    }
    CHECK(total == z);
    CHECK(cfg.total == z);
    const auto& last = cfg.occupied.back();
    if (last.shell.l() == 1 && last.electrons == 6 && last.shell.n() <= 7) p_closures.push_back(z);
  }
  CHECK(p_closures == noble_gas_closures(7));
}

TEST_CASE("labelling counts") {
  const auto so42 = labelling_count(kSo42Order, kSo42Rank);
  CHECK(so42.cartan == 3);
  CHECK(so42.casimirs == 3);
  CHECK(so42.racah_extra == 3);
  CHECK(so42.complete_set == 9);

  const auto su2 = labelling_count(kSu2Order, kSu2Rank);
  CHECK(su2.racah_extra == 0);
  CHECK(su2.complete_set == 2);

  const std::array factors{so42, su2};
  CHECK(composed_complete_set(factors) == 11);

  // su(3): order 8, rank 2 -> one missing label.
  CHECK(labelling_count(8, 2).racah_extra == 1);

  try {
    (void)labelling_count(4, 1);
    FAIL("expected OddDeficit");
  } catch (const LabellingError& e) {
    CHECK(e.kind() == LabellingError::Kind::OddDeficit);
  }
  try {
    (void)labelling_count(3, 2);
    FAIL("expected NegativeDeficit");
  } catch (const LabellingError& e) {
    CHECK(e.kind() == LabellingError::Kind::NegativeDeficit);
  }
}

TEST_CASE("composition adds complete sets") {
  const LabellingCount groups[] = {labelling_count(15, 3), labelling_count(3, 1),
                                   labelling_count(8, 2), labelling_count(10, 2)};
  for (const auto& a : groups) {
    for (const auto& b : groups) {
      const std::array pair{a, b};
      CHECK(composed_complete_set(pair) == a.complete_set + b.complete_set);
    }
  }
}
