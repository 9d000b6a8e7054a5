from setuptools import setup

with open("README.md") as f:
    readme_txt = f.read()

exec(open("abcs_workbench/version.py").read())  # noqa: SIM115

setup(
    name="abcs_workbench",
    version=__version__,  # type: ignore[name-defined]
    author="ABCS Workbench contributors",
    packages=[
        "abcs_workbench",
        "abcs_workbench.model",
        "abcs_workbench.solvers",
        "abcs_workbench.reductions",
        "abcs_workbench.validation",
        "abcs_workbench.toolbox",
        "abcs_workbench.test",
        "abcs_workbench.test.test_data",
    ],
    entry_points={
        "console_scripts": [
            "abcs-workbench = abcs_workbench.cli:main",
        ],
    },
    license="GNU General Public License V3. Copyright (C) 2026 ABCS Workbench contributors.",
    license_file="LICENSE.txt",
    description="Evaluate, target, learn and stress approval-based committee scoring rules",
    long_description=readme_txt,
    long_description_content_type="text/markdown",
    include_package_data=True,
    python_requires=">=3.10",
    install_requires=[
        "pandas>1,<3",
        "numpy>1,<3",
        "tqdm==4.*",
        "pytest>4,<9",
        "pytest-mock==3.*",
        "scipy==1.*",
        "networkx>=3,<4",
        "hypothesis==6.*",
    ],
)
