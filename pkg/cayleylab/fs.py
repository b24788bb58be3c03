"""
Filesystem access for input specs, unit-testable without actual files on disk.
"""

import os


class FilesystemInterface:
    """
    Abstract interface without actual implementations.
    """
    def isFile(self, fileName):
        """
        test -f fileName
        :param fileName: path that may or may not name an existing regular file
        """
        return False

    def readFile(self, fileName):
        """
        Contents of fileName as text.
        :param fileName: path to an existing file
        """
        raise NotImplementedError()


class Filesystem(FilesystemInterface):
    """Actual runtime implementation of FilesystemInterface."""
    def isFile(self, fileName):
        return os.path.isfile(fileName)

    def readFile(self, fileName):
        with open(fileName, encoding='utf-8') as fi:
            return fi.read()


class MockFilesystem(FilesystemInterface):
    """Mock implementation of FilesystemInterface serving files from a dict."""
    def __init__(self, files=None):
        self.files = dict(files or {})  # dict: files[fileName] = contents
        self.reads = []                 # fileNames in order of readFile() calls

    def isFile(self, fileName):
        return fileName in self.files

    def readFile(self, fileName):
        self.reads.append(fileName)
        try:
            return self.files[fileName]
        except KeyError:
            raise FileNotFoundError(fileName)
