from hypothesis import settings

# first calls pay the JIT compile, so wall-clock deadlines are meaningless
settings.register_profile("wfcolor", deadline=None, max_examples=40)
settings.load_profile("wfcolor")
