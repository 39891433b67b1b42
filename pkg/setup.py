#!/usr/bin/env python

# flake8: noqa

#############################################################################################
#                                                                                           #
# This file has been copied from:                                                           #
# https://github.com/Textualize/rich/blob/672f794dd495aa99611c9cfb002bf4b8e440aa46/setup.py #
#                                                                                           #
# ----------------------------------------------------------------------------------------- #
#                                                                                           #
# This is a shim to hopefully allow Github to detect the package,                           #
# build is done with poetry.                                                                #
#                                                                                           #
#############################################################################################

import setuptools

if __name__ == "__main__":
    setuptools.setup(name="latpoly")
