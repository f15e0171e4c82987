"""Angular electron dynamics under the induced electric field"""
