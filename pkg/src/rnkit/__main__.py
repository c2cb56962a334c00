import sys

from rnkit.cli import main

sys.exit(main())
