"""Infrastructure layer - Concrete implementations"""
