from setuptools import setup

setup(name='cayleylab',
      version='0.1.0',
      description='Cayley graphs of symmetric groups generated by transpositions, and their automorphism groups',
      packages=['cayleylab', 'cayleylab.test'],
      package_data={
          'cayleylab': ['cayleylab.cfg', 'templates/*.jinja.txt'],
      },
      install_requires=[
          'jinja2',
          'config>=0.5',
          'networkx',
      ],
      entry_points={
          'console_scripts': [
              'cayleylab = cayleylab.__main__:main'
          ]
      },
      test_suite='cayleylab.test',
      )
