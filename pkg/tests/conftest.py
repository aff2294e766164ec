from hypothesis import settings

# Exact rational arithmetic has occasional slow examples (large denominator
# lcm); wall-clock deadlines would make those flaky.
settings.register_profile("exact", deadline=None, max_examples=50)
settings.load_profile("exact")
