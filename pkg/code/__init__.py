"""
Trie implementations, law checkers and benchmark harness
"""
