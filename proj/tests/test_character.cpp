#include <catch2/catch_amalgamated.hpp>

#include "dps/character.hpp"
#include "dps/grids.hpp"
#include "dps/rng.hpp"

using namespace dps;

TEST_CASE("make_character validates exponent slots against the field") {
  // eps nu^{3/2} on GL_2(R)
  const Character chi = make_character(FieldKind::Real, 2, 1, std::nullopt, {Rat(3, 2), Rat(0)});
  CHECK(chi.sign_exp == 1);
  CHECK(chi.nu_exp.re == Rat(3, 2));

  // alpha^2 nu^{-1} on GL_3(C)
  const Character zeta =
      make_character(FieldKind::Complex, 3, std::nullopt, 2, {Rat(-1), Rat(0)});
  CHECK(zeta.alpha_exp == 2);

  CHECK_THROWS_AS(make_character(FieldKind::Real, 2, std::nullopt, 5, {Rat(0), Rat(0)}),
                  validation_error);
  CHECK_THROWS_AS(make_character(FieldKind::Complex, 2, 1, std::nullopt, {Rat(0), Rat(0)}),
                  validation_error);
  CHECK_THROWS_AS(make_character(FieldKind::Real, 2, std::nullopt, std::nullopt, CRat{}, true),
                  validation_error);

  // sign exponent is reduced mod 2
  CHECK(make_character(FieldKind::Real, 1, 3, std::nullopt, CRat{}).sign_exp == 1);
  CHECK(make_character(FieldKind::Real, 1, -1, std::nullopt, CRat{}).sign_exp == 1);
}

TEST_CASE("s_of extracts the real nu-exponent") {
  CHECK(s_of(make_character(FieldKind::Real, 2, 1, std::nullopt, {Rat(3, 2), Rat(0)})) ==
        Rat(3, 2));
  CHECK(s_of(trivial_character(FieldKind::NonArchimedean, 4)) == 0);
  CHECK(s_of(make_character(FieldKind::Complex, 1, std::nullopt, 2, {Rat(-2), Rat(1)})) ==
        Rat(-2));
}

TEST_CASE("restrict keeps exponents and decrements p down to the terminator") {
  const Character chi = make_character(FieldKind::Real, 2, 1, std::nullopt, {Rat(3, 2), Rat(0)});
  const Character down = restrict_character(chi);
  CHECK(down.p == 1);
  CHECK(down.sign_exp == chi.sign_exp);
  CHECK(down.nu_exp == chi.nu_exp);

  const Character empty = restrict_character(trivial_character(FieldKind::Real, 1));
  CHECK(empty.p == 0);
  CHECK_THROWS_AS(restrict_character(empty), precondition_error);
}

TEST_CASE("invert negates exponents and fixes order-2 parts") {
  const Character nu32 = nu_power(FieldKind::Real, 2, Rat(3, 2));
  CHECK(invert(nu32).nu_exp.re == Rat(-3, 2));

  const Character eps = make_character(FieldKind::Real, 2, 1, std::nullopt, CRat{});
  CHECK(invert(eps) == eps);

  const Character z = make_character(FieldKind::Complex, 1, std::nullopt, 2, {Rat(1), Rat(1)});
  const Character zi = invert(z);
  CHECK(zi.alpha_exp == -2);
  CHECK(zi.nu_exp == (CRat{Rat(-1), Rat(-1)}));
}

TEST_CASE("invert is an involution and flips s, commuting with restrict (grid)") {
  for (FieldKind field : {FieldKind::Real, FieldKind::Complex, FieldKind::NonArchimedean}) {
    for (const Character& chi : character_grid(field, 3, 3, Rat(-3), Rat(3))) {
      CAPTURE(to_string(field), format_exponents(chi));
      CHECK(invert(invert(chi)) == chi);
      CHECK(s_of(invert(chi)) == -s_of(chi));
      CHECK(restrict_character(invert(chi)) == invert(restrict_character(chi)));
    }
  }
}

TEST_CASE("normalize subtracts exponents onto the first block") {
  // (R, 4, 2, 2, nu^2, nu^{1/2}) -> nu^{3/2} on GL_2
  const auto [chi, swapped] = normalize(make_induced(
      FieldKind::Real, 4, 2, 2, nu_power(FieldKind::Real, 2, Rat(2)),
      nu_power(FieldKind::Real, 2, Rat(1, 2))));
  CHECK_FALSE(swapped);
  CHECK(chi.p == 2);
  CHECK(chi.nu_exp.re == Rat(3, 2));

  // already chi x 1: identity
  const Character psi = make_character(FieldKind::Real, 1, 1, std::nullopt, {Rat(5), Rat(0)});
  const auto norm2 = normalize(
      make_induced(FieldKind::Real, 3, 1, 2, psi, trivial_character(FieldKind::Real, 2)));
  CHECK(norm2.chi.sign_exp == psi.sign_exp);
  CHECK(norm2.chi.nu_exp == psi.nu_exp);

  // (C, 4, 2, 2, alpha nu, alpha^{-1} nu^{-1}) -> alpha^2 nu^2
  const auto norm3 = normalize(make_induced(
      FieldKind::Complex, 4, 2, 2,
      make_character(FieldKind::Complex, 2, std::nullopt, 1, {Rat(1), Rat(0)}),
      make_character(FieldKind::Complex, 2, std::nullopt, -1, {Rat(-1), Rat(0)})));
  CHECK(norm3.chi.alpha_exp == 2);
  CHECK(norm3.chi.nu_exp.re == Rat(2));

  // normalize is idempotent on chi x 1
  const auto renorm = normalize(make_induced(FieldKind::Real, 3, 1, 2, norm2.chi,
                                             trivial_character(FieldKind::Real, 2)));
  CHECK(renorm.chi == norm2.chi);
}

TEST_CASE("modular character of the (p1, p2) parabolic") {
  const auto [d1, d2] = modular_character(FieldKind::Real, 2, 2);
  CHECK(d1.nu_exp.re == Rat(2));
  CHECK(d2.nu_exp.re == Rat(-2));
  CHECK(d1.p == 2);

  const auto [e1, e2] = modular_character(FieldKind::NonArchimedean, 1, 3);
  CHECK(e1.nu_exp.re == Rat(3));
  CHECK(e1.p == 1);
  CHECK(e2.nu_exp.re == Rat(-1));
  CHECK(e2.p == 3);

  const auto [f1, f2] = modular_character(FieldKind::Complex, 3, 1);
  CHECK(f1.nu_exp.re == Rat(1));
  CHECK(f2.nu_exp.re == Rat(-3));
}

TEST_CASE("the character grammar round-trips") {
  CounterRng rng(20260809);
  for (int trial = 0; trial < 300; ++trial) {
    const FieldKind field =
        std::array{FieldKind::Real, FieldKind::Complex, FieldKind::NonArchimedean}[rng.next_u32() % 3];
    const int p = 1 + static_cast<int>(rng.next_u32() % 5);
    std::optional<int> sign, alpha;
    if (field == FieldKind::Real) sign = static_cast<int>(rng.next_u32() % 2);
    if (field == FieldKind::Complex) alpha = static_cast<int>(rng.next_u32() % 9) - 4;
    const Rat re(static_cast<int>(rng.next_u32() % 25) - 12, 1 + static_cast<int>(rng.next_u32() % 4));
    const Rat im(static_cast<int>(rng.next_u32() % 9) - 4, 1 + static_cast<int>(rng.next_u32() % 3));
    const Character chi = make_character(field, p, sign, alpha, {re, (rng.next_u32() % 2) ? im : Rat(0)});
    const Character back = parse_character(format_exponents(chi), field, p);
    CAPTURE(format_exponents(chi));
    CHECK(back == chi);
  }

  CHECK(parse_character("nu^{2}", FieldKind::Real, 2) == nu_power(FieldKind::Real, 2, Rat(2)));
  CHECK(parse_character("eps^1*nu^{-1/2}", FieldKind::Real, 1).sign_exp == 1);
  const Character withim = parse_character("alpha^-2*nu^{-1/2+2/3i}", FieldKind::Complex, 2);
  CHECK(withim.alpha_exp == -2);
  CHECK(withim.nu_exp == (CRat{Rat(-1, 2), Rat(2, 3)}));
  CHECK_THROWS_AS(parse_character("nu^2", FieldKind::Real, 1), validation_error);
  CHECK_THROWS_AS(parse_character("eps^1*nu^{1}", FieldKind::Complex, 1), validation_error);
}

TEST_CASE("induced descriptors validate block data") {
  CHECK_THROWS_AS(make_induced(FieldKind::Real, 4, 2, 3, trivial_character(FieldKind::Real, 2),
                               trivial_character(FieldKind::Real, 3)),
                  validation_error);
  CHECK_THROWS_AS(make_induced(FieldKind::Real, 4, 2, 2, trivial_character(FieldKind::Real, 1),
                               trivial_character(FieldKind::Real, 2)),
                  validation_error);
  CHECK_THROWS_AS(make_induced(FieldKind::Real, 4, 2, 2, trivial_character(FieldKind::Complex, 2),
                               trivial_character(FieldKind::Real, 2)),
                  validation_error);
}
