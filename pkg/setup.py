from setuptools import setup, find_packages

setup(
    name='homrep',
    version='0.1.0',
    packages=find_packages(exclude=['examples', 'examples.*']),
    package_data={'homrep': ['config.yaml']},
    install_requires=[
        'numpy>=1.26',
        'scipy>=1.13',
        'networkx>=3.2',
        'pydantic==2.7.4',
        'pyyaml==6.0.1',
        'python-dotenv==1.0.0',
        'tqdm>=4.66',
    ],
    entry_points={
        'console_scripts': [
            'homrep = homrep.cli:main'
        ]
    },
)
