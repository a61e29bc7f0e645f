import sys

from vcradon.cli import main

sys.exit(main())
