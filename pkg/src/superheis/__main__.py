import sys

from superheis.cli import main

sys.exit(main())
