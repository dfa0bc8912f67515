from setuptools import find_packages, setup


install_requires = [
    "coloredlogs",
    "jsonschema",
    "numpy",
    "pandas",
    "pyyaml",
]


setup(
    name="nsimplex",
    description="nsimplex is an n-simplex projection library for exact similarity search in supermetric spaces",
    packages=find_packages(exclude=["tests", "tests.*"]),
    package_data={
        "nsimplex.definition.schema": ["*.yaml"],
    },
    include_package_data=True,
    license="BSD",
    platforms="any",
    classifiers=[
        "Development Status :: 2 - Pre-Alpha",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Operating System :: POSIX",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3 :: Only",
        "Topic :: Scientific/Engineering :: Information Analysis",
    ],
    install_requires=install_requires,
    entry_points={
        "console_scripts": [
            "nsimplex = nsimplex.main:main",
        ],
    },
)
