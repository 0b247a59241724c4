from setuptools import find_packages, setup

RUNTIME = ('Click', 'more-itertools', 'numpy', 'pyparsing')

with open('requirements.txt') as f:
    pins = [line.strip() for line in f if line.strip()]

setup(
    name='braidkit',
    version='0.1.0',
    description='辫子群的字问题、纯辫子梳理与恒等式校验.',
    packages=find_packages(include=('braidkit', 'braidkit.*')),
    python_requires='>=3.8',
    install_requires=[pin.replace('==', '>=') for pin in pins if pin.split('==')[0] in RUNTIME],
    entry_points={'console_scripts': ['braidkit=braidkit.cli:run']},
)
