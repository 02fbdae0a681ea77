"""
Matrix documents, serialization and worked-example fixtures.
"""
