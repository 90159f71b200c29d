from .app_config import LOG_DIR, LOG_LEVEL

# Create logs directory if it doesn't exist
LOG_DIR.mkdir(parents=True, exist_ok=True)

LOGGING_CONFIG = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'standard': {
            'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        },
        'simple': {
            'format': '%(levelname)s - %(message)s'
        }
    },
    'handlers': {
        'console': {
            'level': LOG_LEVEL,
            'formatter': 'simple',
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',  # stdout carries the reports
        },
        'file': {
            'level': 'DEBUG',
            'formatter': 'standard',
            'class': 'logging.handlers.RotatingFileHandler',
            'filename': str(LOG_DIR / 'abmink.log'),
            'maxBytes': 5242880,  # 5MB
            'backupCount': 3,
        }
    },
    'loggers': {
        '': {  # root logger
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': True
        },
        'src': {
            'handlers': ['console', 'file'],
            'level': 'DEBUG',
            'propagate': False
        },
        'pint': {
            'level': 'ERROR',
            'propagate': True
        }
    }
}
