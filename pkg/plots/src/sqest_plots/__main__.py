import argparse
import sys

from .figures import fig1, fig2, fig_scaling


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="sqest-plots", description="Render figures from sqest CSV outputs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fig1", help="optimal vs ln|X| overlay (vacuum)")
    p.add_argument("optimal_csv")
    p.add_argument("lnx_csv")
    p.add_argument("out_image")

    p = sub.add_parser("fig2", help="optimal distributions for several amplitudes")
    p.add_argument("dist_csvs", nargs="+")
    p.add_argument("out_image")

    p = sub.add_parser("fig-scaling", help="log-log rmse sweep with fit")
    p.add_argument("sweep_csv")
    p.add_argument("fit_json")
    p.add_argument("out_image")

    args = parser.parse_args(argv)
    try:
        if args.command == "fig1":
            out = fig1(args.optimal_csv, args.lnx_csv, args.out_image)
        elif args.command == "fig2":
            out = fig2(args.dist_csvs, args.out_image)
        else:
            out = fig_scaling(args.sweep_csv, args.fit_json, args.out_image)
    except ValueError as exc:
        print(f"sqest-plots: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"sqest-plots: {exc}", file=sys.stderr)
        return 4
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
