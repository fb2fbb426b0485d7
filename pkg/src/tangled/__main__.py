import sys

from tangled.cli import main

sys.exit(main())
