import sys

from airypoly.cli import main

sys.exit(main())
