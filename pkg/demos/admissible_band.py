"""Picking a cover factor that survives measurement uncertainty.

A planner who trusts a cover-factor estimate only to within +/-50% needs
the perturbed value to stay inside the modelled band. ``delta_bounds``
gives the admissible window; ``weissberger_delta_limit`` shows where the
foliage model itself stops being validated for a given path length.
"""

from foliage_link import InvalidBand, delta_bounds, weissberger_delta_limit


def main() -> None:
    bounds = delta_bounds(0.01, 1.0, 0.5)
    print(f"band [{bounds.delta_min}, {bounds.delta_max}] at sigma={bounds.sigma}:")
    print(f"  admissible picks: [{bounds.alpha_low_min:.4f}, {bounds.alpha_high_max:.4f}]")
    for candidate in (0.01, 0.02, 0.5, 0.7):
        print(f"  alpha={candidate:<5g} admissible: {bounds.admits(candidate)}")

    print("\ntighter band, same uncertainty:")
    try:
        delta_bounds(0.4, 0.5, 0.5)
    except InvalidBand as exc:
        print(f"  rejected: {exc}")

    print("\nvalidated-depth cover limit (400 m of foliage):")
    for d_km in (0.3, 1.0, 2.0, 5.0):
        print(f"  d={d_km:g} km -> delta <= {weissberger_delta_limit(d_km):.4f}")


if __name__ == "__main__":
    main()
