#!/usr/bin/env python3
"""
Demazure Multiplicity Verification Runner
Runs every verification sweep with the configured bounds; extra arguments
are passed through to `verify all` (e.g. --s-max 20 --format json --out report.json)
"""
import sys
import os
import logging
# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    datefmt='%Y-%m-%d %H:%M:%S'
)
logger = logging.getLogger(__name__)
# Add the project root to Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
from app import main
if __name__ == "__main__":
    logger.info("🧮 Demazure multiplicity verification")
    logger.info("-" * 50)
    try:
        exit_code = main(['verify', 'all', *sys.argv[1:]])
    except KeyboardInterrupt:
        logger.info("\n🛑 Verification interrupted")
        exit_code = 130
    except Exception as e:
        logger.error(f"\n❌ Fatal error: {e}", exc_info=True)
        exit_code = 1
    sys.exit(exit_code)
