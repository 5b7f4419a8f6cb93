import sys

from mimo_capacity.cli.main import main

sys.exit(main())
