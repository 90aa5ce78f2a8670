import logging
import sys

from dotenv import load_dotenv

load_dotenv()

from diagonal.cli import main  # noqa: E402
from diagonal.settings import Settings  # noqa: E402

# Configure logger
logging.basicConfig(level=Settings.LOG_LEVEL, format=Settings.LOG_FORMAT)
logger = logging.getLogger(__name__)

if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
