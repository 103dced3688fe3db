import os.path
import importlib
import logging


def loader(path, *args, ignore=()):
    """Call return_obj(*args) of every module in <path>/content; results ordered by their id."""
    content_dir = os.path.join(os.path.dirname(__file__), path, "content")
    objects = []
    for file in sorted(os.listdir(content_dir)):
        root, ext = os.path.splitext(file)
        if ext != ".py" or file.startswith('__') or file in ignore:
            continue
        logging.debug(f"Loading {file} module from .{path}.content")
        module = importlib.import_module(f".{path}.content.{root}", __package__)
        if not hasattr(module, "return_obj"):
            logging.warning(f"{file} has no return_obj, skipped")
            continue
        objects.append(module.return_obj(*args))
    objects.sort(key=lambda obj: obj.id)
    return objects


def get_suites(bounds, cache):
    return loader("suites", bounds, cache)
