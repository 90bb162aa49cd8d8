from .swear_handler import swear
