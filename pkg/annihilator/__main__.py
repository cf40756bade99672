import sys

from annihilator.main import main

sys.exit(main())
