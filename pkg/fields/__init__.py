"""Flux profiles and solenoid field evaluation"""
