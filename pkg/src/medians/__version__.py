__title__ = "medians"
__description__ = "Integer triangles with integer medians: parametric construction, verification and search"
__url__ = "https://github.com/crlane/python-medians"
__version__ = "0.1.0.b1"
__author__ = "Cameron Lane"
__author_email__ = "crlane@adamanteus.com"
__license__ = "MIT"
__copyright__ = "Copyright 2024 Cameron Lane"
