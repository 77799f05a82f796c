import sys

from cfc.cli import main

sys.exit(main())
