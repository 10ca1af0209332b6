"""Tests package initialization"""
