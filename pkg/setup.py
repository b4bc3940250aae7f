import os
import glob
from setuptools import setup, find_packages

setup_path = os.path.dirname(__file__)


def read(fname):
    return open(os.path.join(setup_path, fname), encoding="utf8").read()


# get version
version = __import__('fourcycles').get_version()

install_requires = [
    'networkx>=2.1',    # trade graphs, isomorphism, cliques
    'numpy',            # modular ranks, dense matrices
    'psutil',           # memory budget of the move graph search
    'prettytable',      # census and report tables
]

# extra requirements to run the test suite
test_requires = [
    'pytest',
]

setup(
    name="fourcycles",
    version=version,
    description="4-cycle systems of complete graphs: enumeration, trades, move graph connectivity "
                "and pair inclusion matrices",
    license="Apache License, Version 2.0",
    keywords="combinatorics graph decomposition cycle system trade",
    packages=find_packages(),
    include_package_data=True,
    scripts=list(glob.glob('fourcycles/bin/*')),
    long_description=read('README.md'),
    classifiers=[
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Development Status :: 4 - Beta",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
    install_requires=install_requires,
    extras_require={
        'dev': test_requires,
    },
)
