import sys

from yangbaxter.cli import main

sys.exit(main())
