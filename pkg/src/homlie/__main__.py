import sys

from homlie.cli import main

sys.exit(main())
