import sys

from cfdedekind.cli import main

sys.exit(main())
