"""Batch-evaluate a deployment scenario and emit reports as CSV and JSON.

One gateway serves four nodes; one of them sits behind full cover and
comes back as an inline error entry instead of aborting the batch. A
deliberately broken document shows the strict parser at work.
"""

import json

from foliage_link import SchemaError, emit_csv, emit_json, evaluate_scenario, parse_scenario

SCENARIO = {
    "name": "orchard-north",
    "frequency_mhz": 868,
    "base_height_m": 24,
    "radio": {
        "tx_power_dbm": 14,
        "tx_gain_dbi": 2,
        "rx_gain_dbi": 2,
        "rx_sensitivity_dbm": -137,
        "required_margin_db": 10,
    },
    "nodes": [
        {"id": "gate", "d_km": 0.4, "delta": 0.1},
        {"id": "row-12", "d_km": 1.8, "h_f_m": 9},
        {"id": "far-corner", "d_km": 3.5, "h_f_m": 18},
        {"id": "thicket", "d_km": 2.2, "delta": 1},
    ],
}


def main() -> None:
    scenario = parse_scenario(json.dumps(SCENARIO))
    reports = evaluate_scenario(scenario)

    print("per-node summary:")
    for report in reports:
        if report.error is not None:
            print(f"  {report.id:<11} ERROR: {report.error}")
            continue
        verdict = "ok" if report.link_ok else "NO LINK"
        print(
            f"  {report.id:<11} delta={report.delta:.3f} "
            f"total={report.l_total_db:8.2f} dB margin={report.margin_db:7.2f} dB "
            f"[{verdict}]"
        )

    print("\nCSV:")
    print(emit_csv(reports))
    print("JSON (first report):")
    print(json.dumps(json.loads(emit_json(reports))[0], indent=2))

    broken = dict(SCENARIO, nodes=[{"id": "x", "d_km": 1, "delta": 0.2, "h_f_m": 3}])
    try:
        parse_scenario(json.dumps(broken))
    except SchemaError as exc:
        print(f"\nstrict parser rejected a broken node: {exc}")


if __name__ == "__main__":
    main()
