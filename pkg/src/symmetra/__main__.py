import sys

from symmetra.cli import main

if __name__ == "__main__":
    sys.exit(main())
