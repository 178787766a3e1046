"""
quatclass - spinor class numbers of totally definite quaternion orders
Main command-line entry point
"""

import sys

from dotenv import load_dotenv

# Load environment variables before settings are first read
load_dotenv()

from quatclass.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
