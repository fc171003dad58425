"""Walk through the 16-pixel image example: approximations, ring checks,
prime and non-prime ideals, the quotient and the product."""

from approxring import (
    direct_product,
    is_approx_integral_domain,
    is_approx_prime_ideal,
    is_approx_ring,
    load_fixture,
    quotient,
)


def main():
    fx = load_fixture("builtin:image16")
    for name in ("R1", "R2", "I_prime", "I_notprime"):
        S = fx.subset(name)
        print(f"Φ*({name}) = {{{', '.join(S.upper().labels)}}}   members {list(S.labels)}")
    for name in ("R1", "R2"):
        print()
        print(is_approx_ring(fx.context(name)).to_text())
    print()
    print("I_prime in R1:", is_approx_prime_ideal(fx.subset("I_prime"), fx.context("R1")).to_text())
    print("I_notprime in R2:", is_approx_prime_ideal(fx.subset("I_notprime"), fx.context("R2")).to_text())

    for rho in ("descriptive", "set"):
        q = quotient(fx.context("R1"), fx.subset("I_prime"), rho=rho, name="I")
        dom = is_approx_integral_domain(q.ring)
        print(f"\nR1/I with rho={rho}: classes {list(q.space.labels)}, well defined {q.well_defined}, "
              f"integral domain {dom.verdict}")
        if not dom.verdict:
            print("  zero divisors:", dom.witnesses("no-zero-divisors"))

    P = direct_product(fx.context("R1"), fx.context("R1"))
    print(f"\nR1 x R1: {len(P.R.members)} elements in R, upper law {P.upper_law}, ring {is_approx_ring(P).verdict}")


if __name__ == "__main__":
    main()
