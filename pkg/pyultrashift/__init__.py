from .pyultrashift import *
