import sys

from src.bench.trigger import main

if __name__ == "__main__":
    sys.exit(main())
