# String similarity join library

# Copyright (c) 2026 segjoin developers.
# Licensed under the Apache License, Version 2.0.

from segjoin.sjlib import core
from segjoin.sjlib import partition
from segjoin.sjlib import index
from segjoin.sjlib import selection
from segjoin.sjlib import verify
from segjoin.sjlib import join
from segjoin.sjlib import dataset
from segjoin.sjlib import config

# Collected before the star imports: the partition function replaces the
# partition module in this namespace.
__all__ = core.__all__ + partition.__all__ + index.__all__ + \
    selection.__all__ + verify.__all__ + join.__all__ + dataset.__all__ + \
    config.__all__

from segjoin.sjlib.core import *
from segjoin.sjlib.partition import *
from segjoin.sjlib.index import *
from segjoin.sjlib.selection import *
from segjoin.sjlib.verify import *
from segjoin.sjlib.join import *
from segjoin.sjlib.dataset import *
from segjoin.sjlib.config import *
