from ..harness.results import Case


class suite:
    def __init__(self, name, id, description, bounds, cache):
        self.name = name
        self.id = id
        self.description = description
        self.bounds = bounds
        self.cache = cache
        self.cases = []

    def add_case(self, family, key, check, **inputs):
        self.cases.append(Case(f"{self.name} {family} {key}", family, check, inputs))

    def __len__(self):
        return len(self.cases)
