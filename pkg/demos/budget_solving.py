"""Inverse planning against a radio budget.

A LoRa-class radio (14 dBm, -137 dBm sensitivity) answers three questions:
how far at a given cover factor, how much cover at a fixed distance, and
how high the foliage may grow before the link budget runs out.
"""

from foliage_link import (
    LinkGeometry,
    RadioConfig,
    link_margin,
    max_foliage_factor,
    max_foliage_height,
    max_loss_budget,
    max_range,
    required_tx_power,
    total_loss,
)


def main() -> None:
    radio = RadioConfig(
        tx_power_dbm=14.0,
        tx_gain_dbi=2.0,
        rx_gain_dbi=2.0,
        rx_sensitivity_dbm=-137.0,
        required_margin_db=10.0,
    )
    print(f"loss budget: {max_loss_budget(radio):.2f} dB "
          f"(at a {radio.required_margin_db:g} dB fade margin)\n")

    print("max range vs cover factor (868 MHz):")
    for delta in (0.0, 0.25, 0.5, 0.75):
        result = max_range(radio, delta, 868.0)
        print(f"  delta={delta:<5g} range={result.value:9.4f} km "
              f"(loss {result.achieved_loss_db:.2f} dB, {result.iterations} iterations)")

    print("\nmax tolerable cover on a 3 km / 868 MHz link:")
    factor = max_foliage_factor(radio, 3.0, 868.0)
    print(f"  delta* = {factor.value:.6f} (converged={factor.converged})")

    print("\nmax foliage height on a 3 km / 868 MHz link under a 25 m antenna:")
    height = max_foliage_height(radio, 3.0, 25.0, 868.0)
    print(f"  h_f* = {height.value:.3f} m")

    loss = total_loss(LinkGeometry(d_km=2, delta=0.95), 2400.0).l_total_db
    print(f"\nthe heavy-cover 2 km / 2400 MHz link loses {loss:.2f} dB:")
    print(f"  margin with this radio : {link_margin(radio, loss):8.2f} dB")
    print(f"  tx power needed        : {required_tx_power(radio, loss):8.2f} dBm")


if __name__ == "__main__":
    main()
