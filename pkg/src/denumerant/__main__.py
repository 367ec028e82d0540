import sys

from denumerant.cli import main

sys.exit(main())
