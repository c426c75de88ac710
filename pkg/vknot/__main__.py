import sys

from vknot.cli import run


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
