import sys

from algentropy.cli import main

sys.exit(main())
