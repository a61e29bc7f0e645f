from setuptools import setup

__version__ = "0.1.0"

setup(
    name="vcradon",
    version=__version__,
)
