"""
Logging utility for the toolkit
"""
from loguru import logger
import sys
import config

# Configure logger
logger.remove()  # Remove default handler

# Console handler on stderr: stdout is reserved for report output
logger.add(
    sys.stderr,
    format=config.LOG_FORMAT,
    level=config.LOG_LEVEL,
    colorize=True
)

# Add file handler
logger.add(
    config.LOG_FILE,
    format=config.LOG_FORMAT,
    level=config.LOG_LEVEL,
    rotation="1 day",
    retention="7 days",
    compression="zip"
)

def get_logger():
    """Get configured logger instance"""
    return logger
