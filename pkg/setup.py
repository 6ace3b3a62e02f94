from setuptools import setup, find_packages

setup(
    name="coined-walks",
    version="0.1.0",
    author="Kaffa Dev",
    description="Coined quantum walks and correlated random walks on the line: simulation, closed forms, classification and limiting densities",
    packages=find_packages(exclude=['tests']),
    py_modules=['app'],
    install_requires=[
        'numpy>=1.24.0',
        'scipy>=1.10.0',
        'pandas>=1.5.0',
        'python-dotenv>=1.0.0',
        'pyyaml>=6.0',
    ],
    extras_require={
        'dev': [
            'pytest>=7.0',
            'hypothesis>=6.0',
        ],
    },
    python_requires='>=3.8',
    entry_points={
        'console_scripts':[
            'coined-walks=app:main',
        ],
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Physics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],
)
