# All fourcycles versions (including in setup.py) are sourced from these
MAJOR_VER=0
MINOR_VER=1
MICRO_VER=0
