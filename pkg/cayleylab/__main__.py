import sys

from .cli import run


def main(args=None):
    if args is None:
        args = sys.argv[1:]
    sys.exit(run(args))

if __name__ == "__main__":
    main()
