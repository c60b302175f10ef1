import sys

from bundleseq.cli import main

sys.exit(main())
