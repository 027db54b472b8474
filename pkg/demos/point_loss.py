"""Single-link loss breakdowns: the three canonical cases.

A 2 km sensor-to-gateway path at 2400 MHz, evaluated clear, under heavy
cover, and with the cover factor derived from heights (15 m of foliage
under a 30 m base-station antenna).
"""

from foliage_link import LinkGeometry, total_loss


def show(label: str, geometry: LinkGeometry, f_mhz: float = 2400.0) -> None:
    breakdown = total_loss(geometry, f_mhz)
    split = breakdown.split
    print(f"--- {label} ---")
    print(f"cover factor : {split.delta:g}")
    print(f"foliage path : {split.d_f_m:.1f} m   free-space path: {split.d_fsp_m:.1f} m")
    print(
        f"loss         : foliage {breakdown.l_foliage_db:.7f} dB "
        f"({breakdown.foliage.regime.value}, {breakdown.foliage.validity.value})"
    )
    print(f"               free-space {breakdown.l_fsp_db:.7f} dB")
    print(f"               total {breakdown.l_total_db:.7f} dB")
    print()


def main() -> None:
    show("clear path (no foliage)", LinkGeometry(d_km=2, delta=0.0))
    show("heavy cover (95% of the path)", LinkGeometry(d_km=2, delta=0.95))
    show("height-derived cover (h_f = 15 m, h = 30 m)", LinkGeometry(d_km=2, h_m=30, h_f_m=15))

    clear = total_loss(LinkGeometry(d_km=2, delta=0.0), 2400).l_total_db
    heavy = total_loss(LinkGeometry(d_km=2, delta=0.95), 2400).l_total_db
    print(f"heavy cover costs {heavy / clear:.3f}x the clear-path loss")


if __name__ == "__main__":
    main()
