from .invariants import *
from .ktheory import *
from .partialaction import *
from .shiftspace import *
from .ultragraph import *
from .vertexset import *
