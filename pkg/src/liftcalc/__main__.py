import sys

from liftcalc._cli import main

sys.exit(main())
