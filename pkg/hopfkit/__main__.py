import sys

from hopfkit.commands import main

if __name__ == "__main__":
    sys.exit(main())
