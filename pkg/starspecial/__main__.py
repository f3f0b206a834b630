import sys

from starspecial.cli import main

sys.exit(main())
