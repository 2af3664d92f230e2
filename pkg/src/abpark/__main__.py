import sys

from abpark.cli import main

sys.exit(main())
