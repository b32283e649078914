import sys

from pingpong.cli import main

sys.exit(main())
