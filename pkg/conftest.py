"""
Pytest collection wiring for the jacradix self-driving test suite.

The modules in jacradix/jrtests/ are written for the testAll() driver
(the testjacradix entry point): each exposes run(), which returns True
if every check in that module passed. This hook exposes each module's
run() as one pytest item, so `pytest` runs the same suite as testAll().
"""
import importlib

import pytest


class JrRunItem(pytest.Item):
    def __init__(self, *, modname, **kwargs):
        super().__init__(**kwargs)
        self.modname = modname

    def runtest(self):
        module = importlib.import_module(self.modname)
        ok = module.run()
        if not ok:
            raise AssertionError("{}.run() reported failure".format(self.modname))

    def repr_failure(self, excinfo):
        return super().repr_failure(excinfo)

    def reportinfo(self):
        return self.path, None, self.modname + ".run()"


class JrModuleFile(pytest.File):
    def collect(self):
        modname = "jacradix.jrtests." + self.path.stem
        yield JrRunItem.from_parent(self, name="run", modname=modname)


def pytest_collect_file(file_path, parent):
    if (file_path.suffix == ".py" and file_path.name.startswith("test")
            and file_path.parent.name == "jrtests"
            and file_path.parent.parent.name == "jacradix"):
        return JrModuleFile.from_parent(parent, path=file_path)
    return None
